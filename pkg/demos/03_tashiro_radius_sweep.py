"""Sweep the slice radius and classify the classical contact structures.

The structure induced by the Sasaki metric ("standard") is a contact metric
structure only at radius 1/2; the rescaled structure ("rectified") is contact
at every radius but K-contact only at radius 1 on constant-curvature spaces.
"""

from crosscontact import contact, crossmodel
from crosscontact.crossmodel import Family, SpaceId

RADII = [0.25, 0.5, 1.0, 2.0]


def classify_row(frame, r):
    std = contact.classify(contact.standard_structure(frame, r)).flags
    rect = contact.classify(contact.rectified_structure(frame, r)).flags
    return std, rect


def main() -> None:
    for space in (SpaceId(Family.SPHERE, 4),
                  SpaceId(Family.COMPLEX_PROJECTIVE, 2)):
        frame = crossmodel.build_frame(space)
        print(f"\n{space.label()}  (m_eps/2 = {frame.m_half})")
        print(f"{'r':>6} {'std contact':>12} {'rect contact':>13} "
              f"{'rect K-contact':>15} {'rect Sasakian':>14}")
        for r in RADII:
            std, rect = classify_row(frame, r)
            print(f"{r:>6} {str(std['contact_metric']):>12} "
                  f"{str(rect['contact_metric']):>13} "
                  f"{str(rect['k_contact']):>15} "
                  f"{str(rect['sasakian']):>14}")


if __name__ == "__main__":
    main()
