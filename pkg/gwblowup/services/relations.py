"""Independent check of the engine against the associativity relations.

Basis of H*(X_r): T_0 = 1, T_1 dual to H, T_{i+1} dual to E_i for
i = 1..r, and T_m (m = r + 2) the point class. The potential is

    Gamma = sum N_{d,alpha} q_1^d q_2^{a_1} ... q_{r+1}^{a_r} y_m^n / n!,

so a divisor derivative d/dy_s multiplies a coefficient by its exponent
D(s) and d/dy_m shifts the normalized power of y_m by one. Products of
series convolve over two-part splits of the class with binomial(n, n1).

Nothing here calls the recursion directly; only ``engine.invariant``.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import NamedTuple

from gwblowup.models.curve import CurveClass
from gwblowup.schemas.report import ResidualRecord, VerificationReport
from gwblowup.services.engine import InvariantEngine
from gwblowup.services.lattice import binomial, expected_dim, literal_split_terms

logger = logging.getLogger(__name__)

SplitList = list[tuple[CurveClass, CurveClass]]


class Basis:
    """Indices 0..m of the cohomology basis of X_r with their pairing."""

    def __init__(self, r: int):
        if r < 0:
            raise ValueError(f"r must be >= 0, got {r}")
        self.r = r
        self.m = r + 2

    def check(self, *indices: int) -> None:
        for index in indices:
            if not 1 <= index <= self.m:
                raise ValueError(f"basis index {index} outside [1, {self.m}]")

    def pairing(self, a: int, b: int) -> int:
        """(T_a . T_b)"""
        if a > b:
            a, b = b, a
        if a == 0:
            return 1 if b == self.m else 0
        if a != b or a == self.m:
            return 0
        return 1 if a == 1 else -1

    def eps(self, s: int) -> int:
        if not 1 <= s <= self.r + 1:
            raise ValueError(f"epsilon is defined on [1, {self.r + 1}], got {s}")
        return 1 if s == 1 else -1


class Monomial(NamedTuple):
    """The coefficient of q^cls y_m^n / n! in a series."""

    cls: CurveClass
    n: int


class RelationVerifier:
    def __init__(self, engine: InvariantEngine):
        self.engine = engine

    def gamma_coeff(self, i: int, j: int, k: int, mono: Monomial) -> int:
        """Coefficient of Gamma_ijk at ``mono``."""
        basis = Basis(mono.cls.r)
        basis.check(i, j, k)
        if mono.cls.is_zero:
            raise ValueError("the zero class carries no coefficient")
        return self._gamma(basis, (i, j, k), mono.cls, mono.n)

    def relation_residual(self, i: int, j: int, k: int, l: int, mono: Monomial) -> int:
        """LHS - RHS of the relation R_{i,j,k,l} at ``mono``."""
        basis = Basis(mono.cls.r)
        basis.check(i, j, k, l)
        if mono.cls.is_zero:
            raise ValueError("the zero class carries no coefficient")
        if mono.n < 0:
            raise ValueError(f"monomial degree must be >= 0, got {mono.n}")
        residual, _ = self._residual(basis, (i, j, k, l), mono.cls, mono.n, None)
        return residual

    def relation_i_star_residual(self, c: CurveClass, i: int) -> int:
        """LHS - RHS of R(i)* at position i (0-based), summed over the full split set."""
        n = expected_dim(c)
        if n < 1:
            raise ValueError(f"R(i)* needs n >= 1, got {n} for {c}")
        if c.d <= 0 or any(not 0 <= a <= c.d for a in c.alpha):
            raise ValueError(f"R(i)* needs d > 0 and 0 <= alpha <= d, got {c}")
        if not 0 <= i < c.r:
            raise IndexError(f"position {i} out of range for r = {c.r}")
        lhs = (c.alpha[i] ** 2 - c.d**2) * self.engine.invariant(c)
        rhs = 0
        for d1, beta, d2, gamma, _ in literal_split_terms(c.d, c.alpha, False, True):
            b_i, c_i = beta[i], gamma[i]
            factor = d1 * d2 * b_i * c_i - d1 * d1 * c_i * c_i
            pairing = d1 * d2 - sum(b * g for b, g in zip(beta, gamma))
            coefficient = binomial(n - 1, 3 * d1 - sum(beta) - 1)
            if factor == 0 or pairing == 0 or coefficient == 0:
                continue
            left = self.engine.invariant(CurveClass(d1, beta))
            right = self.engine.invariant(CurveClass(d2, gamma))
            rhs += left * right * pairing * factor * coefficient
        return lhs - rhs

    def verify_relations(
        self, r: int, d_max: int, n_max: int, workers: int = 1
    ) -> VerificationReport:
        """Check R_{i,j,k,l} for all i,j,k,l in [1, m], 1 <= d <= d_max,
        0 <= a_i <= d and 0 <= n <= n_max."""
        if r < 0 or d_max < 1 or n_max < 0:
            raise ValueError(f"need r >= 0, d_max >= 1, n_max >= 0; got {r}, {d_max}, {n_max}")
        basis = Basis(r)
        classes = [
            CurveClass(d, alpha)
            for d in range(1, d_max + 1)
            for alpha in product(range(d + 1), repeat=r)
        ]
        logger.info(f"Verifying relations on X_{r}: {len(classes)} classes, n <= {n_max}")

        def check_class(cls: CurveClass) -> tuple[int, int, list[ResidualRecord]]:
            return self._check_class(basis, cls, n_max)

        report = VerificationReport(r=r, d_max=d_max, n_max=n_max)
        with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
            for instances, nontrivial, failures in executor.map(check_class, classes):
                report.instances += instances
                report.nontrivial += nontrivial
                report.failures.extend(failures)
        for failure in report.failures:
            logger.warning(
                f"R{failure.indices} at ({failure.d}, {tuple(failure.alpha)}), "
                f"n = {failure.n}: residual {failure.residual}"
            )
        logger.info(
            f"Checked {report.instances} instances ({report.nontrivial} nontrivial), "
            f"{len(report.failures)} failures"
        )
        return report

    def _check_class(
        self, basis: Basis, cls: CurveClass, n_max: int
    ) -> tuple[int, int, list[ResidualRecord]]:
        instances = 0
        nontrivial = 0
        failures = []
        split_list = self._product_splits(cls)
        for quad in product(range(1, basis.m + 1), repeat=4):
            # the only y-degree at which this quadruple has nonzero terms
            n = expected_dim(cls) - 1 - quad.count(basis.m)
            if not 0 <= n <= n_max:
                continue
            instances += 1
            residual, any_term = self._residual(basis, quad, cls, n, split_list)
            nontrivial += any_term
            if residual:
                failures.append(
                    ResidualRecord(
                        indices=quad, d=cls.d, alpha=list(cls.alpha), n=n, residual=residual
                    )
                )
        return instances, nontrivial, failures

    def _product_splits(self, cls: CurveClass) -> SplitList:
        # ordered pairs; degree-0 parts are only -[i] since every other one has N = 0
        return [
            (CurveClass(d1, beta), CurveClass(d2, gamma))
            for d1, beta, d2, gamma, _ in literal_split_terms(cls.d, cls.alpha, False, True)
        ]

    def _gamma(
        self, basis: Basis, indices: tuple[int, ...], cls: CurveClass, n: int
    ) -> int:
        if n < 0:
            return 0
        t = indices.count(basis.m)
        if expected_dim(cls) != n + t:
            return 0
        if cls.d < 0 or any(a > cls.d for a in cls.alpha):
            return 0
        value = self.engine.invariant(cls)
        for s in indices:
            if value == 0:
                break
            if s == 1:
                value *= cls.d
            elif s != basis.m:
                value *= cls.alpha[s - 2]
        return value

    def _product(
        self,
        basis: Basis,
        first: tuple[int, int, int],
        second: tuple[int, int, int],
        n: int,
        split_list: SplitList,
    ) -> int:
        """Coefficient of (Gamma_first * Gamma_second) at (cls, n)."""
        total = 0
        t1 = first.count(basis.m)
        for left, right in split_list:
            n1 = expected_dim(left) - t1
            coefficient = binomial(n, n1)
            if coefficient == 0:
                continue
            a = self._gamma(basis, first, left, n1)
            if a == 0:
                continue
            total += coefficient * a * self._gamma(basis, second, right, n - n1)
        return total

    def _residual(
        self,
        basis: Basis,
        quad: tuple[int, int, int, int],
        cls: CurveClass,
        n: int,
        split_list: SplitList | None,
    ) -> tuple[int, bool]:
        """(LHS - RHS, whether any single term is nonzero)."""
        i, j, k, l = quad
        m = basis.m
        # every term is homogeneous of this y_m-degree
        if n != expected_dim(cls) - 1 - quad.count(m):
            return 0, False
        if split_list is None:
            split_list = self._product_splits(cls)
        lhs_terms = [
            basis.pairing(i, j) * self._gamma(basis, (k, l, m), cls, n),
            -basis.pairing(k, j) * self._gamma(basis, (i, l, m), cls, n),
            basis.pairing(k, l) * self._gamma(basis, (i, j, m), cls, n),
            -basis.pairing(i, l) * self._gamma(basis, (k, j, m), cls, n),
        ]
        rhs_terms = []
        for s in range(1, m):
            eps = basis.eps(s)
            rhs_terms.append(eps * self._product(basis, (j, k, s), (i, s, l), n, split_list))
            rhs_terms.append(-eps * self._product(basis, (i, j, s), (k, s, l), n, split_list))
        any_term = any(lhs_terms) or any(rhs_terms)
        return sum(lhs_terms) - sum(rhs_terms), any_term
