"""Explore the five-parameter family of invariant metrics on G/H.

Shows the U-map (the correction term of the Levi-Civita connection in a
reductive homogeneous space), the Killing criterion for the characteristic
direction, and the naturally-reductive locus.
"""

import numpy as np

from crosscontact import crossmodel, homgeo
from crosscontact.crossmodel import Family, SpaceId
from crosscontact.homgeo import MetricParams


def main() -> None:
    frame = crossmodel.build_frame(SpaceId(Family.COMPLEX_PROJECTIVE, 2))
    x = np.zeros(frame.dim_mbar)
    x[0] = 1.0

    samples = [
        ("round (all equal)", MetricParams(1, 1, 1, 1, 1)),
        ("Killing but not reductive", MetricParams(2, 0.7, 1.3, 0.7, 1.3)),
        ("generic", MetricParams(1.1, 0.5, 2.0, 3.0, 0.25)),
    ]
    print(f"{'metric':>28} {'U = 0':>7} {'X Killing':>10} {'residual':>10}")
    for name, params in samples:
        metric = homgeo.metric_from_params(frame, params)
        reductive = homgeo.is_naturally_reductive(frame, metric)
        killing, residual = homgeo.is_killing(frame, metric, x)
        print(f"{name:>28} {str(reductive):>7} {str(killing):>10} "
              f"{residual:>10.2e}")

    # the closed-form residual for the Killing field is max(|ae-be|/2, |ah-bh|/4)
    params = MetricParams(1, 0.5, 2.0, 3.0, 0.25)
    metric = homgeo.metric_from_params(frame, params)
    _, residual = homgeo.is_killing(frame, metric, x)
    predicted = max(abs(0.5 - 3.0) / 2, abs(2.0 - 0.25) / 4)
    print(f"\nclosed-form Killing residual: computed {residual:.6f}, "
          f"predicted {predicted:.6f}")


if __name__ == "__main__":
    main()
