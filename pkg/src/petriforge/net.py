"""Place/transition net structure and firing semantics.

A net is a bipartite graph of places and transitions with weighted arcs.
Markings are plain tuples of nonnegative ints, indexed by place index, so
they hash cheaply and never alias: firing returns a fresh tuple.

Places and transitions are identified by their declaration order (a dense
index) and by a name that is unique within its kind.  All iteration and
serialization follows declaration order, which keeps every downstream
artifact (reachability graphs, PNML, DOT) byte-deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    NetDefinitionError,
    NotEnabledError,
    UnknownPlaceError,
    UnknownTransitionError,
)

Marking = tuple  # tuple of nonnegative ints, one entry per place


class PetriNet:
    """Immutable place/transition net.

    Arc weights are stored sparsely per transition as ``(place_index, weight)``
    pairs; absent pairs have weight 0.  Instances are safe to share between
    threads.  Build instances through :class:`NetBuilder`.
    """

    __slots__ = (
        "name",
        "places",
        "transitions",
        "_pindex",
        "_tindex",
        "_pre",
        "_post",
    )

    def __init__(self, name, places, transitions, pre, post):
        self.name = name
        self.places = tuple(places)
        self.transitions = tuple(transitions)
        self._pindex = {p: i for i, p in enumerate(self.places)}
        self._tindex = {t: i for i, t in enumerate(self.transitions)}
        # Per transition: tuple of (place index, weight), ascending place index.
        self._pre = tuple(tuple(sorted(arcs)) for arcs in pre)
        self._post = tuple(tuple(sorted(arcs)) for arcs in post)

    # -- identity helpers ---------------------------------------------------

    def place_index(self, place):
        """Resolve a place name (or index) to its dense index."""
        if isinstance(place, int):
            if 0 <= place < len(self.places):
                return place
            raise UnknownPlaceError(place)
        try:
            return self._pindex[place]
        except KeyError:
            raise UnknownPlaceError(place) from None

    def transition_index(self, transition):
        """Resolve a transition name (or index) to its dense index."""
        if isinstance(transition, int):
            if 0 <= transition < len(self.transitions):
                return transition
            raise UnknownTransitionError(transition)
        try:
            return self._tindex[transition]
        except KeyError:
            raise UnknownTransitionError(transition) from None

    def has_place(self, name):
        return name in self._pindex

    def weight(self, source, target):
        """Extended weight function: 0 when (source, target) is not an arc."""
        if source in self._pindex and target in self._tindex:
            p, t = self._pindex[source], self._tindex[target]
            for i, w in self._pre[t]:
                if i == p:
                    return w
            return 0
        if source in self._tindex and target in self._pindex:
            t, p = self._tindex[source], self._pindex[target]
            for i, w in self._post[t]:
                if i == p:
                    return w
            return 0
        raise UnknownPlaceError((source, target))

    def input_arcs(self, transition):
        """(place_index, weight) pairs consumed by the transition."""
        return self._pre[self.transition_index(transition)]

    def output_arcs(self, transition):
        """(place_index, weight) pairs produced by the transition."""
        return self._post[self.transition_index(transition)]

    def arcs(self):
        """All arcs as (source name, target name, weight), canonical order."""
        out = []
        for t, tname in enumerate(self.transitions):
            for p, w in self._pre[t]:
                out.append((self.places[p], tname, w))
        for t, tname in enumerate(self.transitions):
            for p, w in self._post[t]:
                out.append((tname, self.places[p], w))
        return out

    # -- marking helpers ----------------------------------------------------

    def marking_from(self, tokens):
        """Build a marking tuple from a mapping of place name to token count."""
        m = [0] * len(self.places)
        for name, count in tokens.items():
            m[self.place_index(name)] = count
        return tuple(m)

    def marking_dict(self, marking, nonzero_only=True):
        """Render a marking as a name -> tokens dict (nonzero entries by default)."""
        self._check_marking(marking)
        items = zip(self.places, marking)
        if nonzero_only:
            return {p: v for p, v in items if v}
        return dict(items)

    def _check_marking(self, marking):
        if len(marking) != len(self.places):
            raise UnknownPlaceError(
                f"marking has {len(marking)} entries, net has {len(self.places)} places"
            )

    # -- firing rule ----------------------------------------------------------

    def is_enabled(self, marking, transition):
        """True iff every input place holds at least the arc weight."""
        self._check_marking(marking)
        t = self.transition_index(transition)
        for p, w in self._pre[t]:
            if marking[p] < w:
                return False
        return True

    def fire(self, marking, transition):
        """Fire an enabled transition, returning the successor marking.

        The input marking is never mutated.  Raises :class:`NotEnabledError`
        when the transition is not enabled.
        """
        self._check_marking(marking)
        t = self.transition_index(transition)
        for p, w in self._pre[t]:
            if marking[p] < w:
                raise NotEnabledError(self.transitions[t], marking)
        m = list(marking)
        for p, w in self._pre[t]:
            m[p] -= w
        for p, w in self._post[t]:
            m[p] += w
        return tuple(m)

    def enabled_set(self, marking):
        """Indices of all transitions enabled at the marking, ascending."""
        self._check_marking(marking)
        out = []
        for t in range(len(self.transitions)):
            for p, w in self._pre[t]:
                if marking[p] < w:
                    break
            else:
                out.append(t)
        return out

    def is_concurrently_enabled(self, marking, transitions):
        """True iff the set of transitions can occur simultaneously.

        Checks that the combined input demand of the set fits within the
        marking, place by place.  The empty set is trivially enabled.
        """
        self._check_marking(marking)
        demand = {}
        for tr in set(self.transition_index(t) for t in transitions):
            for p, w in self._pre[tr]:
                demand[p] = demand.get(p, 0) + w
        return all(marking[p] >= need for p, need in demand.items())

    def max_concurrency_degree(self, marking):
        """Size of the largest concurrently enabled subset of enabled transitions.

        Exact search over subsets of the enabled set, pruned by remaining
        capacity; enabled sets in practice are small enough for this.
        """
        enabled = self.enabled_set(marking)
        best = 0

        def extend(i, chosen, remaining):
            nonlocal best
            if chosen > best:
                best = chosen
            if chosen + (len(enabled) - i) <= best:
                return
            if i == len(enabled):
                return
            t = enabled[i]
            fits = all(remaining[p] >= w for p, w in self._pre[t])
            if fits:
                for p, w in self._pre[t]:
                    remaining[p] -= w
                extend(i + 1, chosen + 1, remaining)
                for p, w in self._pre[t]:
                    remaining[p] += w
            extend(i + 1, chosen, remaining)

        extend(0, 0, list(marking))
        return best

    def __repr__(self):
        return (
            f"PetriNet({self.name!r}, {len(self.places)} places, "
            f"{len(self.transitions)} transitions)"
        )


@dataclass(frozen=True)
class MarkedNet:
    """A net paired with its initial marking."""

    net: PetriNet
    initial: Marking

    def __post_init__(self):
        self.net._check_marking(self.initial)

    def structurally_equal(self, other):
        """Equality of structure, names, weights and initial marking."""
        a, b = self.net, other.net
        return (
            a.places == b.places
            and a.transitions == b.transitions
            and a._pre == b._pre
            and a._post == b._post
            and self.initial == other.initial
        )


class NetBuilder:
    """Validating constructor for marked nets.

    Declaration order of places and transitions becomes the canonical order.
    Validates bipartiteness, positive integer weights, name uniqueness and
    nonemptiness, so analysis code can assume a well-formed net.
    """

    def __init__(self, name="net"):
        self.name = name
        self._places = []
        self._tokens = []
        self._transitions = []
        self._arcs = []  # (transition position, place name, weight, is_input)

    def place(self, name, tokens=0):
        if not isinstance(name, str) or not name:
            raise NetDefinitionError(f"place name must be a nonempty string: {name!r}")
        if name in self._places:
            raise NetDefinitionError(f"duplicate place name {name!r}")
        if not isinstance(tokens, int) or isinstance(tokens, bool) or tokens < 0:
            raise NetDefinitionError(f"initial tokens for {name!r} must be an int >= 0")
        self._places.append(name)
        self._tokens.append(tokens)
        return self

    def transition(self, name, inputs=None, outputs=None):
        """Declare a transition with `inputs`/`outputs` mapping place name -> weight."""
        if not isinstance(name, str) or not name:
            raise NetDefinitionError(f"transition name must be a nonempty string: {name!r}")
        if any(name == t for t in self._transitions):
            raise NetDefinitionError(f"duplicate transition name {name!r}")
        pos = len(self._transitions)
        self._transitions.append(name)
        for mapping, is_input in ((inputs or {}, True), (outputs or {}, False)):
            seen = set()
            for pname, w in mapping.items():
                if pname in seen:
                    raise NetDefinitionError(f"duplicate arc {pname!r} on {name!r}")
                seen.add(pname)
                if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                    raise NetDefinitionError(
                        f"arc weight must be an int >= 1: W({pname!r}, {name!r}) = {w!r}"
                    )
                self._arcs.append((pos, pname, w, is_input))
        return self

    def build(self):
        """Validate and return the marked net."""
        if not self._places:
            raise NetDefinitionError("a net needs at least one place")
        if not self._transitions:
            raise NetDefinitionError("a net needs at least one transition")
        overlap = set(self._places) & set(self._transitions)
        if overlap:
            raise NetDefinitionError(f"places and transitions share names: {sorted(overlap)}")
        pindex = {p: i for i, p in enumerate(self._places)}
        pre = [[] for _ in self._transitions]
        post = [[] for _ in self._transitions]
        for tpos, pname, w, is_input in self._arcs:
            if pname not in pindex:
                raise NetDefinitionError(
                    f"transition {self._transitions[tpos]!r} references unknown place {pname!r}"
                )
            (pre if is_input else post)[tpos].append((pindex[pname], w))
        net = PetriNet(self.name, self._places, self._transitions, pre, post)
        return MarkedNet(net, tuple(self._tokens))
