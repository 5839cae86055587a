"""Parameters of the exponential-kernel self-exciting process."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class KernelParams:
    """Excitation kernel a*exp(-b*x) with immigrant intensity nu.

    Each event adds ``a`` to the intensity, decaying at rate ``b``; immigrants
    arrive at constant rate ``nu``.  The mean number of direct offspring per
    event is ``a/b``.  The analytic recursions are valid on finite horizons
    for any a >= 0; the simulators additionally require a < b so that
    clusters are almost surely finite.
    """

    a: float
    b: float
    nu: float = 1.0

    def __post_init__(self) -> None:
        if not self.a >= 0.0:
            raise ValueError(f"kernel amplitude a must be >= 0, got {self.a}")
        if not self.b > 0.0:
            raise ValueError(f"kernel decay b must be > 0, got {self.b}")
        if not self.nu >= 0.0:
            raise ValueError(f"immigrant intensity nu must be >= 0, got {self.nu}")

    @property
    def branching_ratio(self) -> float:
        """Mean offspring count a/b of a single event."""
        return self.a / self.b

    @property
    def is_subcritical(self) -> bool:
        """True when a < b, i.e. clusters are almost surely finite."""
        return self.a < self.b
