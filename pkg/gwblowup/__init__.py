# Genus-0 Gromov-Witten invariants of the blown-up projective plane
__version__ = "0.1.0"
