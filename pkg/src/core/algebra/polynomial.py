"""
Sparse Laurent polynomials with exact integer coefficients.

A polynomial is a mapping from exponent vectors (one integer per variable,
negative allowed) to non-zero Python integers.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import InputError

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]

ZETA = "ζ"


class SparsePoly:
    """
    Immutable sparse Laurent polynomial in at most three named variables.

    Attributes:
        variables: Variable names; position i matches exponent slot i
        terms: Exponent vector -> non-zero integer coefficient
    """

    MAX_VARIABLES = 3

    __slots__ = ("_variables", "_terms")

    def __init__(
        self,
        variables: Sequence[str] = (),
        terms: Optional[Mapping[Sequence[int], int]] = None,
    ):
        variables = tuple(variables)
        if len(variables) > self.MAX_VARIABLES:
            raise InputError(f"at most {self.MAX_VARIABLES} variables, got {variables}")
        if len(set(variables)) != len(variables):
            raise InputError(f"repeated variable name in {variables}")
        clean: Dict[Exponents, int] = {}
        for exps, coefficient in (terms or {}).items():
            key = tuple(int(e) for e in exps)
            if len(key) != len(variables):
                raise InputError(f"exponent vector {key} does not match variables {variables}")
            clean[key] = clean.get(key, 0) + int(coefficient)
        self._variables = variables
        self._terms = {k: c for k, c in clean.items() if c}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def constant(cls, value: int, variables: Sequence[str] = ()) -> "SparsePoly":
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def variable(cls, name: str, exponent: int = 1) -> "SparsePoly":
        return cls((name,), {(exponent,): 1})

    @classmethod
    def monomial(cls, coefficient: int, **exponents: int) -> "SparsePoly":
        names = tuple(exponents)
        return cls(names, {tuple(exponents[n] for n in names): coefficient})

    # -- accessors ------------------------------------------------------------

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, **exponents: int) -> int:
        """Coefficient of the monomial with the given exponents (missing ones are 0)."""
        for name in exponents:
            if name not in self._variables and exponents[name]:
                return 0
        key = tuple(exponents.get(name, 0) for name in self._variables)
        return self._terms.get(key, 0)

    def degree(self, name: str) -> int:
        """Highest exponent of ``name``; 0 for constants and the zero polynomial."""
        if name not in self._variables or not self._terms:
            return 0
        i = self._variables.index(name)
        return max(exps[i] for exps in self._terms)

    def low_degree(self, name: str) -> int:
        if name not in self._variables or not self._terms:
            return 0
        i = self._variables.index(name)
        return min(exps[i] for exps in self._terms)

    def term_count(self) -> int:
        return len(self._terms)

    def sorted_terms(self) -> List[Tuple[int, Exponents]]:
        """(coefficient, exponents) sorted by exponent vector."""
        return [(self._terms[k], k) for k in sorted(self._terms)]

    # -- alignment ------------------------------------------------------------

    def _embed(self, variables: Tuple[str, ...]) -> Dict[Exponents, int]:
        if variables == self._variables:
            return self._terms
        slots = [variables.index(v) for v in self._variables]
        out: Dict[Exponents, int] = {}
        for exps, coefficient in self._terms.items():
            key = [0] * len(variables)
            for slot, e in zip(slots, exps):
                key[slot] = e
            out[tuple(key)] = coefficient
        return out

    def _union(self, other: "SparsePoly") -> Tuple[str, ...]:
        extra = tuple(v for v in other._variables if v not in self._variables)
        return self._variables + extra

    @staticmethod
    def _coerce(value: object) -> Optional["SparsePoly"]:
        if isinstance(value, SparsePoly):
            return value
        if isinstance(value, int):
            return SparsePoly.constant(value)
        return None

    def with_variables(self, variables: Sequence[str]) -> "SparsePoly":
        """Re-express over a superset of the current variables."""
        variables = tuple(variables)
        missing = [v for v in self._variables if v not in variables]
        if missing and any(self.degree(v) or self.low_degree(v) for v in missing):
            raise InputError(f"cannot drop variables {missing} that occur in the polynomial")
        kept = tuple(v for v in self._variables if v in variables)
        trimmed: Dict[Exponents, int] = {}
        idx = [self._variables.index(v) for v in kept]
        for exps, c in self._terms.items():
            key = tuple(exps[i] for i in idx)
            trimmed[key] = trimmed.get(key, 0) + c
        return SparsePoly(variables, SparsePoly(kept, trimmed)._embed(variables))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: object) -> "SparsePoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        variables = self._union(rhs)
        out = dict(self._embed(variables))
        for k, c in rhs._embed(variables).items():
            out[k] = out.get(k, 0) + c
        return SparsePoly(variables, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self._variables, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: object) -> "SparsePoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "SparsePoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "SparsePoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        variables = self._union(rhs)
        left = self._embed(variables)
        right = rhs._embed(variables)
        out: Dict[Exponents, int] = {}
        for ka, ca in left.items():
            for kb, cb in right.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                out[key] = out.get(key, 0) + ca * cb
        return SparsePoly(variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePoly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if len(self._terms) != 1:
                raise InputError("only a monomial with coefficient ±1 can be inverted")
            (exps, coefficient), = self._terms.items()
            if coefficient not in (1, -1):
                raise InputError("only a monomial with coefficient ±1 can be inverted")
            inverse = SparsePoly(self._variables, {tuple(-e for e in exps): coefficient})
            return inverse ** (-exponent)
        result = SparsePoly.constant(1, self._variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, **values: Scalar) -> Scalar:
        """
        Exact numeric value at the given point.

        Every variable of the polynomial must be given. Negative exponents are
        evaluated with ``Fraction``; integral results come back as ``int``.
        """
        missing = [v for v in self._variables if v not in values]
        if missing:
            raise InputError(f"no value given for {missing}")
        total = Fraction(0)
        for exps, coefficient in self._terms.items():
            term = Fraction(coefficient)
            for name, e in zip(self._variables, exps):
                value = Fraction(values[name])
                if e < 0 and value == 0:
                    raise InputError(f"{name}=0 at a negative exponent")
                term *= value ** e
            total += term
        return int(total) if total.denominator == 1 else total

    def substitute(self, **values: Union[int, "SparsePoly"]) -> "SparsePoly":
        """Replace variables by integers or polynomials."""
        remaining = tuple(v for v in self._variables if v not in values)
        keep = [i for i, v in enumerate(self._variables) if v not in values]
        result = SparsePoly.constant(0, remaining)
        for exps, coefficient in self._terms.items():
            term = SparsePoly(remaining, {tuple(exps[i] for i in keep): coefficient})
            for i, name in enumerate(self._variables):
                if name in values and exps[i]:
                    value = self._coerce(values[name])
                    if value is None:
                        raise InputError(f"cannot substitute {values[name]!r} for {name}")
                    term = term * (value ** exps[i])
            result = result + term
        return result

    # -- comparison -----------------------------------------------------------

    def _normal_form(self) -> frozenset:
        return frozenset(
            (c, tuple((v, e) for v, e in zip(self._variables, k) if e))
            for k, c in self._terms.items()
        )

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._normal_form() == rhs._normal_form()

    def __hash__(self) -> int:
        return hash(self._normal_form())

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering ------------------------------------------------------------

    def pretty(self) -> str:
        """Human-readable form, highest total degree first: ``3ζ+3``."""
        if not self._terms:
            return "0"
        order = sorted(self._terms, key=lambda k: (sum(k), k), reverse=True)
        pieces: List[str] = []
        for exps in order:
            coefficient = self._terms[exps]
            factors = []
            for name, e in zip(self._variables, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            magnitude = abs(coefficient)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}{body}"
            sign = "-" if coefficient < 0 else "+"
            if not pieces:
                pieces.append(text if sign == "+" else f"-{text}")
            else:
                pieces.append(f"{sign}{text}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"SparsePoly({self.pretty()!r}, variables={self._variables})"

    def to_dict(self) -> Dict[str, object]:
        """JSON shape: ``{"vars": [...], "terms": [[coeff, [e1, ...]], ...]}``."""
        return {
            "vars": list(self._variables),
            "terms": [[c, list(k)] for c, k in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "SparsePoly":
        try:
            variables = tuple(data["vars"])  # type: ignore[arg-type]
            terms: Dict[Exponents, int] = {}
            for coefficient, exps in data["terms"]:  # type: ignore[union-attr]
                key = tuple(int(e) for e in exps)
                terms[key] = terms.get(key, 0) + int(coefficient)
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"malformed polynomial JSON: {e}") from e
        return cls(variables, terms)


def poly_sum(polys: Iterable[SparsePoly], variables: Sequence[str] = ()) -> SparsePoly:
    """Sum of polynomials, starting from the zero polynomial in ``variables``."""
    total = SparsePoly.constant(0, variables)
    for p in polys:
        total = total + p
    return total
