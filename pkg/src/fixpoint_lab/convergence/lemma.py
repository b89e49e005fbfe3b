"""
Finite-prefix diagnostics for recurrences a_{n+1} <= (1 - mu_n) a_n + rho_n

The asymptotic hypotheses (sum of mu_n diverges, rho_n = o(mu_n)) cannot be
decided from finitely many terms; the verdict reports proxies for them and
says "consistent", never "proven".
"""
import logging
import numpy as np
import numpy.typing as npt
import fixpoint_lab.base as fp_base
import fixpoint_lab.exception as fp_exception

_logger = logging.getLogger(__name__)

MIN_WITNESS_LENGTH = 8


class RecurrenceWitness:
    """
    a holds N + 1 terms a_0..a_N, mu and rho hold N terms each
    """

    def __init__(self, a: npt.ArrayLike, mu: npt.ArrayLike, rho: npt.ArrayLike) -> None:
        self.a = np.asarray(a, dtype=np.float64).ravel()
        self.mu = np.asarray(mu, dtype=np.float64).ravel()
        self.rho = np.asarray(rho, dtype=np.float64).ravel()
        if len(self.mu) != len(self.rho) or len(self.a) != len(self.mu) + 1:
            raise fp_exception.MalformedWitness(
                f"Expected len(a) == len(mu) + 1 == len(rho) + 1, got {len(self.a)}, {len(self.mu)}, {len(self.rho)}")
        for name, values in (("a", self.a), ("mu", self.mu), ("rho", self.rho)):
            if not np.all(np.isfinite(values)):
                raise fp_exception.MalformedWitness(f"Witness sequence {name} has non-finite entries")
        if np.any(self.a < 0.0) or np.any(self.rho < 0.0):
            raise fp_exception.MalformedWitness("Witness sequences a and rho must be non-negative")
        if np.any(self.mu <= 0.0) or np.any(self.mu >= 1.0):
            raise fp_exception.MalformedWitness("Witness sequence mu must lie strictly inside (0, 1)")

    @property
    def length(self) -> int:
        """N, the number of recurrence steps"""
        return len(self.mu)


class LemmaVerdict:
    """
    Outcome of check_lemma1; every statistic is recomputable from the witness
    """

    def __init__(self,
                 recurrence_holds: bool,
                 first_violation: int | None,
                 mu_divergence_proxy: float,
                 rho_little_o: float,
                 rho_ratio_head: float,
                 a_head: float,
                 a_tail: float) -> None:
        self.recurrence_holds = recurrence_holds
        self.first_violation = first_violation
        self.mu_divergence_proxy = mu_divergence_proxy
        self.rho_little_o = rho_little_o
        self.rho_ratio_head = rho_ratio_head
        self.a_head = a_head
        self.a_tail = a_tail

    @property
    def ratio_decreasing(self) -> bool:
        """rho/mu over the last quarter does not exceed its first-quarter maximum"""
        return self.rho_little_o <= self.rho_ratio_head

    @property
    def tail_decays(self) -> bool:
        """a over the last quarter is below the first quarter, or identically zero"""
        return self.a_tail < self.a_head or self.a_tail == 0.0

    @property
    def consistent(self) -> bool:
        """Finite prefix is consistent with a_n -> 0"""
        return self.recurrence_holds and self.ratio_decreasing and self.tail_decays

    def to_dict(self) -> dict:
        """Report representation"""
        return {"recurrence_holds": self.recurrence_holds,
                "first_violation": self.first_violation,
                "mu_divergence_proxy": self.mu_divergence_proxy,
                "rho_little_o": self.rho_little_o,
                "rho_ratio_head": self.rho_ratio_head,
                "a_head": self.a_head,
                "a_tail": self.a_tail,
                "consistent": self.consistent}


def quarter_length(count: int) -> int:
    """Number of terms in the head and tail windows"""
    return max(1, count // 4)


def simulate_recurrence(a0: float, mu: npt.ArrayLike, rho: npt.ArrayLike) -> RecurrenceWitness:
    """
    Witness satisfying the recurrence with equality
    """
    mu = np.asarray(mu, dtype=np.float64).ravel()
    rho = np.asarray(rho, dtype=np.float64).ravel()
    a = np.empty(len(mu) + 1, dtype=np.float64)
    a[0] = a0
    for n in range(len(mu)):
        a[n + 1] = (1.0 - mu[n]) * a[n] + rho[n]
    return RecurrenceWitness(a, mu, rho)


def check_lemma1(witness: RecurrenceWitness, slack: float = fp_base.AUDIT_SLACK) -> LemmaVerdict:
    """
    Checks a_{n+1} <= (1 - mu_n) a_n + rho_n + slack for all n < N and
    reports the partial sum of mu, the largest rho/mu over the first and the
    last quarter and the largest a over the first and the last quarter.
    """
    count = witness.length
    if count < MIN_WITNESS_LENGTH:
        raise fp_exception.MalformedWitness(f"Witness needs at least {MIN_WITNESS_LENGTH} steps, got {count}")
    a, mu, rho = witness.a, witness.mu, witness.rho
    bound = (1.0 - mu) * a[:-1] + rho
    failing = np.flatnonzero(a[1:] > bound + slack)
    first_violation = int(failing[0]) if len(failing) > 0 else None
    quarter = quarter_length(count)
    ratio = rho / mu
    verdict = LemmaVerdict(recurrence_holds=first_violation is None,
                           first_violation=first_violation,
                           mu_divergence_proxy=float(np.sum(mu)),
                           rho_little_o=float(np.max(ratio[-quarter:])),
                           rho_ratio_head=float(np.max(ratio[:quarter])),
                           a_head=float(np.max(a[:quarter])),
                           a_tail=float(np.max(a[-quarter:])))
    if first_violation is not None:
        _logger.debug("Recurrence violated at n=%d: %.17g > %.17g", first_violation,
                      a[first_violation + 1], bound[first_violation])
    return verdict
