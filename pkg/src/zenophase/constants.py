"""Physical constants (SI)."""

HBAR = 1.054571817e-34  # J s
JOULE_PER_MEV = 1.602176634e-22  # J per meV
