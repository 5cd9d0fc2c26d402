"""Explicit finite posets with optional orthogonality.

These are the ground-truth oracles for every meet/join/skew-meet claim in
the package: everything here is decided by brute-force enumeration. The
loader computes the reflexive-transitive closure of the supplied relation
and validates antisymmetry, the least element, and (when present) the
orthogonality laws, failing with the violated law named. A small library
of standard fixtures ships alongside: Boolean cubes, the modular-but-not-
distributive MO2, the non-orthomodular hexagon O6, and two non-examples
for the upper bound property.
"""

from __future__ import annotations

import itertools
import json

from .errors import OrthoMissing, ParseError, PosetInvalid, UnknownElement

__all__ = [
    "FinitePoset",
    "boolean_cube",
    "mo2",
    "o6",
    "v_poset",
    "bowtie",
    "trivial_poset",
    "pentagon_broken_join",
    "bad_orthogonality_fixture",
    "poset_to_json",
    "poset_from_json",
    "load_poset",
]


class FinitePoset:
    """A finite poset given by labels and a <= relation, with optional
    orthogonality pairs and an optional o-complement map for the top."""

    def __init__(self, elements, le_pairs, zero, ortho_pairs=None, complements=None):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise PosetInvalid("duplicate element labels")
        index = {x: i for i, x in enumerate(self.elements)}
        self._index = index
        n = len(self.elements)
        le = [[False] * n for _ in range(n)]
        for i in range(n):
            le[i][i] = True
        for x, y in le_pairs:
            if x not in index or y not in index:
                raise PosetInvalid(f"le pair ({x!r}, {y!r}) mentions unknown elements")
            le[index[x]][index[y]] = True
        # transitive closure (Warshall); the input is data, not trusted
        for k in range(n):
            lk = le[k]
            for i in range(n):
                if le[i][k]:
                    li = le[i]
                    for jj in range(n):
                        if lk[jj]:
                            li[jj] = True
        for i in range(n):
            for jj in range(n):
                if i != jj and le[i][jj] and le[jj][i]:
                    raise PosetInvalid(
                        f"antisymmetry fails: {self.elements[i]!r} and {self.elements[jj]!r}"
                    )
        if zero not in index:
            raise PosetInvalid(f"zero label {zero!r} is not an element")
        z = index[zero]
        if not all(le[z][i] for i in range(n)):
            raise PosetInvalid(f"zero {zero!r} is not the least element")
        self._le = le
        self.zero = zero
        self.complements = dict(complements) if complements else None

        if ortho_pairs is None and self.complements is not None:
            # induced orthogonality: x perp y iff y <= complement(x)
            if set(self.complements) != set(self.elements):
                raise PosetInvalid("complement map must cover every element")
            ortho_pairs = [
                (x, y)
                for x in self.elements
                for y in self.elements
                if le[index[y]][index[self.complements[x]]]
            ]
        self.ortho_pairs = None
        if ortho_pairs is not None:
            pairs = set()
            for x, y in ortho_pairs:
                if x not in index or y not in index:
                    raise PosetInvalid(f"ortho pair ({x!r}, {y!r}) mentions unknown elements")
                pairs.add((x, y))
            for x, y in list(pairs):
                if (y, x) not in pairs:
                    raise PosetInvalid(f"⊥1 fails: {x!r} ⊥ {y!r} but not conversely")
            for x in self.elements:
                if (x, zero) not in pairs:
                    raise PosetInvalid(f"⊥3 fails: {x!r} is not orthogonal to zero")
            for x, y in itertools.product(self.elements, repeat=2):
                if not le[index[x]][index[y]]:
                    continue
                for z in self.elements:
                    if (y, z) in pairs and (x, z) not in pairs:
                        raise PosetInvalid(
                            f"⊥2 fails: {x!r} <= {y!r} ⊥ {z!r} but {x!r} not ⊥ {z!r}"
                        )
            self.ortho_pairs = frozenset(pairs)

    # -- queries ------------------------------------------------------------

    def _i(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"{x!r} is not an element of this poset") from None

    def le(self, x, y) -> bool:
        return self._le[self._i(x)][self._i(y)]

    def perp(self, x, y) -> bool:
        if self.ortho_pairs is None:
            raise OrthoMissing("this poset carries no orthogonality relation")
        self._i(x), self._i(y)
        return (x, y) in self.ortho_pairs

    def brute_glb(self, x, y):
        """Greatest lower bound by enumeration, None when it does not exist."""
        lows = [u for u in self.elements if self.le(u, x) and self.le(u, y)]
        for u in lows:
            if all(self.le(v, u) for v in lows):
                return u
        return None

    def brute_lub(self, x, y):
        """Least upper bound by enumeration, None when it does not exist."""
        ups = [u for u in self.elements if self.le(x, u) and self.le(y, u)]
        for u in ups:
            if all(self.le(u, v) for v in ups):
                return u
        return None

    def has_ubp(self):
        """Upper bound property: (True, None), or (False, witness pair)."""
        for x, y in itertools.combinations(self.elements, 2):
            if any(self.le(x, u) and self.le(y, u) for u in self.elements):
                if self.brute_lub(x, y) is None:
                    return False, (x, y)
        return True, None

    def overriding(self, x, y) -> bool:
        """x overridden by y: everything orthogonal to y is orthogonal to x."""
        if self.ortho_pairs is None:
            raise OrthoMissing("overriding needs the orthogonality relation")
        self._i(x), self._i(y)
        return all((z, x) in self.ortho_pairs for z in self.elements if (z, y) in self.ortho_pairs)

    def brute_skew_meet(self, x, y):
        """max{u : u overridden by x and u <= y}, None when no maximum exists."""
        cands = [u for u in self.elements if self.overriding(u, x) and self.le(u, y)]
        for c in cands:
            if all(self.le(u, c) for u in cands):
                return c
        return None

    def top(self):
        for x in self.elements:
            if all(self.le(y, x) for y in self.elements):
                return x
        return None

    def as_structure(self):
        """Adapter into the axiom harness. The join hook is the brute lub
        (None when missing), so posets without the upper bound property
        should be screened with has_ubp first."""
        from .axioms import StructureHandle

        complement_hook = None
        if self.complements is not None:
            top = self.top()

            def complement_hook(x, p):
                return self.complements[x] if top is not None and p == top else None

        return StructureHandle(
            name=f"poset({len(self.elements)} elements)",
            zero=self.zero,
            eq=lambda a, b: a == b,
            le=self.le,
            join=self.brute_lub,
            elements=self.elements,
            perp=self.perp if self.ortho_pairs is not None else None,
            meet=self.brute_glb,
            skew=self.brute_skew_meet if self.ortho_pairs is not None else None,
            overridden=self.overriding if self.ortho_pairs is not None else None,
            complement_in=complement_hook,
            key=lambda x: x,
            describe=str,
        )


# ---------------------------------------------------------------------------
# fixtures


def boolean_cube(n):
    """The Boolean algebra 2^n; labels are bitstrings, zero is all zeros."""
    if not 1 <= n <= 4:
        raise ValueError("cube fixtures are kept small: 1 <= n <= 4")
    labels = ["".join(bits) for bits in itertools.product("01", repeat=n)]
    le_pairs = [
        (a, b)
        for a in labels
        for b in labels
        if all(x <= y for x, y in zip(a, b))
    ]
    comps = {a: "".join("1" if c == "0" else "0" for c in a) for a in labels}
    return FinitePoset(labels, le_pairs, "0" * n, complements=comps)


def mo2():
    """MO2: the modular ortholattice 0 < a, a', b, b' < 1 with two blocks.

    Orthomodular but not distributive, so it fails the decomposition laws."""
    elements = ["0", "a", "a'", "b", "b'", "1"]
    le_pairs = [("0", x) for x in elements] + [(x, "1") for x in elements]
    comps = {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"}
    return FinitePoset(elements, le_pairs, "0", complements=comps)


def o6():
    """O6, the benzene ring: two chains 0 < a < b < 1 and 0 < c < d < 1 with
    a <-> d, b <-> c as complements. The standard non-orthomodular fixture."""
    elements = ["0", "a", "b", "c", "d", "1"]
    le_pairs = [("0", x) for x in elements] + [(x, "1") for x in elements] + [("a", "b"), ("c", "d")]
    comps = {"0": "1", "1": "0", "a": "d", "d": "a", "b": "c", "c": "b"}
    return FinitePoset(elements, le_pairs, "0", complements=comps)


def v_poset():
    """{0, a, b} with a, b incomparable: no common upper bound for (a, b)."""
    ortho = [("0", x) for x in ["0", "a", "b"]] + [(x, "0") for x in ["a", "b"]]
    return FinitePoset(["0", "a", "b"], [("0", "a"), ("0", "b")], "0", ortho_pairs=ortho)


def bowtie():
    """0 < a, b < u, v: the pair (a, b) has common upper bounds but no least
    one, so the upper bound property fails."""
    elements = ["0", "a", "b", "u", "v"]
    le_pairs = [("0", x) for x in elements] + [
        ("a", "u"), ("a", "v"), ("b", "u"), ("b", "v"),
    ]
    return FinitePoset(elements, le_pairs, "0")


def trivial_poset():
    ortho = [("0", "0")]
    return FinitePoset(["0"], [], "0", ortho_pairs=ortho)


def pentagon_broken_join():
    """Negative fixture: the pentagon N5 with one deliberately corrupted join
    table entry (a v b is recorded as c instead of 1), which breaks
    associativity with a replayable three-element witness."""
    from .axioms import StructureHandle

    poset = FinitePoset(
        ["0", "a", "b", "c", "1"],
        [("0", x) for x in ["a", "b", "c", "1"]] + [("a", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        "0",
    )
    table = {}
    for x in poset.elements:
        for y in poset.elements:
            table[(x, y)] = poset.brute_lub(x, y)
    table[("a", "b")] = "c"
    table[("b", "a")] = "c"

    return StructureHandle(
        name="pentagon-broken-join",
        zero="0",
        eq=lambda a, b: a == b,
        le=poset.le,
        join=lambda x, y: table[(x, y)],
        elements=poset.elements,
        meet=poset.brute_glb,
        key=lambda x: x,
        describe=str,
    )


def bad_orthogonality_fixture():
    """Negative fixture: a two-chain where x ⊥ y is (wrongly) defined as
    x == y. Symmetric, but neither downward closed nor zero-orthogonal, and
    it makes x ⊕ x = x, violating the degeneracy law."""
    from .axioms import StructureHandle

    chain = FinitePoset(["0", "1"], [("0", "1")], "0")
    return StructureHandle(
        name="two-chain-bad-perp",
        zero="0",
        eq=lambda a, b: a == b,
        le=chain.le,
        join=chain.brute_lub,
        elements=chain.elements,
        perp=lambda x, y: x == y,
        meet=chain.brute_glb,
        key=lambda x: x,
        describe=str,
    )


# ---------------------------------------------------------------------------
# JSON wire format


def poset_to_json(p: FinitePoset) -> dict:
    doc = {
        "elements": list(p.elements),
        "le": sorted([x, y] for x in p.elements for y in p.elements if x != y and p.le(x, y)),
        "zero": p.zero,
    }
    if p.ortho_pairs is not None:
        doc["ortho"] = sorted([x, y] for x, y in p.ortho_pairs)
    return doc


def poset_from_json(doc) -> FinitePoset:
    if not isinstance(doc, dict):
        raise ParseError("poset JSON must be an object")
    for field in ("elements", "le", "zero"):
        if field not in doc:
            raise ParseError(f'poset JSON is missing the "{field}" field')
    try:
        return FinitePoset(
            doc["elements"],
            [tuple(pair) for pair in doc["le"]],
            doc["zero"],
            ortho_pairs=[tuple(pair) for pair in doc["ortho"]] if "ortho" in doc else None,
        )
    except PosetInvalid:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def load_poset(path) -> FinitePoset:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return poset_from_json(doc)
