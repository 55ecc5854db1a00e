"""Finite groups as Cayley tables, group actions, and projectivity of
permutation modules via the stabilizer-order criterion."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Field


class GroupError(Exception):
    pass


class UnknownElement(GroupError):
    pass


@dataclass
class GroupTable:
    """A finite group given by its full multiplication table."""

    elements: list
    table: dict  # (g, h) -> g*h
    identity: str
    _inverse: dict = field(default_factory=dict, repr=False)

    def validate(self):
        errs = []
        elems = self.elements
        eset = set(elems)
        if len(eset) != len(elems):
            errs.append("duplicate elements")
        if self.identity not in eset:
            errs.append(f"identity {self.identity!r} not an element")
        for g in elems:
            for h in elems:
                if (g, h) not in self.table:
                    errs.append(f"missing product ({g!r}, {h!r})")
                elif self.table[(g, h)] not in eset:
                    errs.append(f"product {g!r}*{h!r} not an element")
        if errs:
            raise GroupError("; ".join(errs))
        for g in elems:
            if self.table[(self.identity, g)] != g or self.table[(g, self.identity)] != g:
                errs.append(f"identity law fails at {g!r}")
        for g in elems:
            for h in elems:
                for t in elems:
                    if self.table[(self.table[(g, h)], t)] != self.table[(g, self.table[(h, t)])]:
                        errs.append(f"associativity fails at ({g!r},{h!r},{t!r})")
                        break
        for g in elems:
            invs = [h for h in elems
                    if self.table[(g, h)] == self.identity and self.table[(h, g)] == self.identity]
            if not invs:
                errs.append(f"no two-sided inverse for {g!r}")
            else:
                self._inverse[g] = invs[0]
        if errs:
            raise GroupError("; ".join(errs))
        return self

    @property
    def order(self):
        return len(self.elements)

    def mul(self, g, h):
        return self.table[(g, h)]

    def inverse(self, g):
        if not self._inverse:
            for a in self.elements:
                for b in self.elements:
                    if self.table[(a, b)] == self.identity and self.table[(b, a)] == self.identity:
                        self._inverse[a] = b
                        break
        return self._inverse[g]

    @classmethod
    def from_json(cls, obj):
        _check_keys(obj, {"elements", "identity", "table"}, "group")
        table = {(g, h): gh for g, h, gh in obj["table"]}
        return cls(list(obj["elements"]), table, obj["identity"]).validate()

    def to_json(self):
        return {
            "elements": list(self.elements),
            "identity": self.identity,
            "table": [[g, h, gh] for (g, h), gh in sorted(self.table.items())],
        }


def _check_keys(obj, allowed, what):
    unknown = set(obj) - allowed
    if unknown:
        raise GroupError(f"unknown keys in {what}: {sorted(unknown)}")
    missing = allowed - set(obj)
    if missing:
        raise GroupError(f"missing keys in {what}: {sorted(missing)}")


@dataclass
class GroupAction:
    """A left action of a finite group on a finite set."""

    group: GroupTable
    set: list
    act: dict  # (g, x) -> g.x

    def validate(self):
        errs = []
        sset = set(self.set)
        for g in self.group.elements:
            for x in self.set:
                if (g, x) not in self.act:
                    errs.append(f"missing action entry ({g!r}, {x!r})")
                elif self.act[(g, x)] not in sset:
                    errs.append(f"action value of ({g!r}, {x!r}) outside the set")
        if errs:
            raise GroupError("; ".join(errs))
        for x in self.set:
            if self.act[(self.group.identity, x)] != x:
                errs.append(f"identity moves {x!r}")
        for g in self.group.elements:
            for h in self.group.elements:
                gh = self.group.mul(g, h)
                for x in self.set:
                    if self.act[(gh, x)] != self.act[(g, self.act[(h, x)])]:
                        errs.append(f"action axiom fails at ({g!r},{h!r},{x!r})")
        if errs:
            raise GroupError("; ".join(errs))
        return self

    def apply(self, g, x):
        return self.act[(g, x)]

    def orbit(self, x):
        seen = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in self.group.elements:
                z = self.act[(g, y)]
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
        return [y for y in self.set if y in seen]

    def orbits(self):
        out = []
        seen = set()
        for x in self.set:
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    @classmethod
    def from_json(cls, obj):
        _check_keys(obj, {"group", "set", "act"}, "action")
        group = GroupTable.from_json(obj["group"])
        act = {(g, x): gx for g, x, gx in obj["act"]}
        return cls(group, list(obj["set"]), act).validate()

    def to_json(self):
        return {
            "group": self.group.to_json(),
            "set": list(self.set),
            "act": [[g, x, gx] for (g, x), gx in sorted(self.act.items())],
        }


@dataclass
class BiSet:
    """A finite set with commuting left G- and right H-actions."""

    left_group: GroupTable
    right_group: GroupTable
    set: list
    left_act: dict   # (g, s) -> g.s
    right_act: dict  # (s, h) -> s.h

    def validate(self):
        GroupAction(self.left_group, self.set, self.left_act).validate()
        right_as_left = {(h, s): self.right_act[(s, self.right_group.inverse(h))]
                         for h in self.right_group.elements for s in self.set}
        GroupAction(self.right_group, self.set, right_as_left).validate()
        for g in self.left_group.elements:
            for s in self.set:
                for h in self.right_group.elements:
                    if self.right_act[(self.left_act[(g, s)], h)] != \
                            self.left_act[(g, self.right_act[(s, h)])]:
                        raise GroupError(f"actions do not commute at ({g!r},{s!r},{h!r})")
        return self

    def left_action(self):
        return GroupAction(self.left_group, self.set, dict(self.left_act))

    def right_action_as_left(self):
        """The right action viewed as a left action of the opposite group via h.s = s.h^-1."""
        act = {(h, s): self.right_act[(s, self.right_group.inverse(h))]
               for h in self.right_group.elements for s in self.set}
        return GroupAction(self.right_group, self.set, act)


def stabilizer_order(a: GroupAction, x) -> int:
    if x not in set(a.set):
        raise UnknownElement(repr(x))
    return sum(1 for g in a.group.elements if a.act[(g, x)] == x)


def permutation_module_projective(a: GroupAction, f: Field):
    """kX is projective over kG iff every stabilizer order is invertible in k.

    Returns (flag, offending_orbit_representatives)."""
    bad = []
    for orb in a.orbits():
        if not f.invertible(stabilizer_order(a, orb[0])):
            bad.append(orb[0])
    return not bad, bad


def morphism_stabilizers(p, alpha):
    """Orders of the left and right stabilizers of a non-endomorphism alpha."""
    c = p.category
    m = c.morphisms[alpha]
    if m.src == m.dst:
        raise GroupError(f"{alpha!r} is an endomorphism")
    left = sum(1 for g in c.hom(m.dst, m.dst) if c.compose(g, alpha) == alpha)
    right = sum(1 for h in c.hom(m.src, m.src) if c.compose(alpha, h) == alpha)
    return left, right


def is_projective_over(p, f: Field):
    """Whether every non-endomorphism has both stabilizer orders invertible in f.

    Returns (flag, witnesses); one witness morphism per violating Aut-orbit."""
    witnesses = []
    c = p.category
    seen_orbits = set()
    for name, m in c.morphisms.items():
        if m.src == m.dst:
            continue
        if name in seen_orbits:
            continue
        orbit = frozenset(c.compose(g, c.compose(name, h))
                          for g in c.hom(m.dst, m.dst) for h in c.hom(m.src, m.src))
        seen_orbits.update(orbit)
        la, ra = morphism_stabilizers(p, name)
        if not (f.invertible(la) and f.invertible(ra)):
            witnesses.append(name)
    return not witnesses, witnesses


def cyclic_group(n: int, prefix: str = "g") -> GroupTable:
    elems = ["e"] + [f"{prefix}{i}" if i > 1 else prefix for i in range(1, n)]
    table = {}
    for i in range(n):
        for j in range(n):
            table[(elems[i], elems[j])] = elems[(i + j) % n]
    return GroupTable(elems, table, "e").validate()


def symmetric_group_3() -> GroupTable:
    perms = {
        "e": (0, 1, 2), "r": (1, 2, 0), "r2": (2, 0, 1),
        "s": (1, 0, 2), "sr": (0, 2, 1), "sr2": (2, 1, 0),
    }
    elems = list(perms)
    by_perm = {v: k for k, v in perms.items()}
    table = {}
    for a in elems:
        for b in elems:
            pa, pb = perms[a], perms[b]
            table[(a, b)] = by_perm[tuple(pa[pb[i]] for i in range(3))]
    return GroupTable(elems, table, "e").validate()
