"""PQ-trees for consecutive-ones testing.

A PQ-tree over a column universe represents the set of column orderings
reachable by permuting children of P nodes and reversing children of Q
nodes.  Reducing the tree with a column set S restricts it to orderings
in which S is consecutive, or fails if none remains.

Each reduction touches only the pertinent subtree: P children live in
insertion-ordered dicts so empty siblings are never scanned, and Q
children form symmetric doubly-linked lists (two unordered neighbor
slots per child), so reversals cost nothing and splices are local.  The
pertinent children of every node are collected while climbing from the
leaves of S to their deepest common ancestor.
"""

from __future__ import annotations

from .errors import InputDomainError

_LEAF, _P, _Q = 0, 1, 2
_EMPTY, _FULL, _PARTIAL = 0, 1, 2


class _Node:
    __slots__ = ("kind", "parent", "col", "mark", "depth",
                 "kids", "nbrs", "ends", "full_end")

    def __init__(self, kind, col=-1):
        self.kind = kind
        self.parent = None
        self.col = col
        self.mark = 0
        self.depth = 0
        self.kids = None          # P: dict of children (ordered set)
        self.nbrs = [None, None]  # sibling links while a child of a Q
        self.ends = None          # Q: [endmost child, endmost child]
        self.full_end = None      # transient: full-side end of a partial Q


def _new_p(children):
    node = _Node(_P)
    node.kids = {}
    for ch in children:
        node.kids[ch] = None
        ch.parent = node
    return node


def _new_q(children):
    """Q node over the given left-to-right child sequence (>= 2)."""
    node = _Node(_Q)
    for ch in children:
        ch.parent = node
        ch.nbrs = [None, None]
    for a, b in zip(children, children[1:]):
        _link(a, b)
    node.ends = [children[0], children[-1]]
    return node


def _link(a, b):
    a.nbrs[a.nbrs.index(None)] = b
    b.nbrs[b.nbrs.index(None)] = a


def _relink(node, old, new):
    """In node's neighbor slots, replace old (possibly None) by new."""
    node.nbrs[node.nbrs.index(old)] = new


def _group(nodes):
    """A single node covering the given children: the node itself if
    one, else a fresh P node over them."""
    if len(nodes) == 1:
        return nodes[0]
    return _new_p(nodes)


class PQTree:
    def __init__(self, num_cols: int):
        if num_cols < 0:
            raise InputDomainError("negative column count")
        self.num_cols = num_cols
        self.leaves = [_Node(_LEAF, col=c) for c in range(num_cols)]
        if num_cols == 1:
            self.root = self.leaves[0]
        elif num_cols > 1:
            self.root = _new_p(self.leaves)
        else:
            self.root = None
        self._round = 0
        self._pert: dict = {}

    # ----- traversal -----

    @staticmethod
    def _chain(start, prev=None):
        """Children of a Q in order, walking the sibling links from one
        end (or from any child away from prev)."""
        out = []
        cur = start
        while cur is not None:
            out.append(cur)
            nxt = cur.nbrs[1] if cur.nbrs[0] is prev else cur.nbrs[0]
            prev, cur = cur, nxt
        return out

    def _children(self, node):
        if node.kind == _P:
            return list(node.kids)
        return self._chain(node.ends[0])

    def frontier(self) -> list[int]:
        """Left-to-right column order of the current tree."""
        out = []
        stack = [self.root] if self.root is not None else []
        while stack:
            node = stack.pop()
            if node.kind == _LEAF:
                out.append(node.col)
            else:
                stack.extend(reversed(self._children(node)))
        return out

    # ----- reduction -----

    def reduce(self, cols) -> bool:
        """Constrain the tree so cols are consecutive; False if
        impossible.  On failure the tree is left in an unspecified state
        and must not be reduced further.
        """
        s = set(cols)
        if any(c < 0 or c >= self.num_cols for c in s):
            raise InputDomainError("column index out of range")
        if len(s) <= 1 or len(s) == self.num_cols:
            return True
        self._round += 1
        self._pert = {}
        root = self._pertinent_root(s)
        return self._process(root, True) is not None

    def _pertinent_root(self, s):
        """Deepest common ancestor of the leaves for s; also records each
        pertinent node in its parent's pertinent-children list."""
        rnd = self._round
        pert = self._pert
        it = iter(s)
        first = self.leaves[next(it)]
        path = []
        node = first
        while node is not None:
            node.mark = rnd
            path.append(node)
            if node.parent is not None:
                pert.setdefault(node.parent, []).append(node)
            node = node.parent
        for d, node in enumerate(reversed(path)):
            node.depth = d
        shallowest = None
        for c in it:
            node = self.leaves[c]
            seg = []
            while node.mark != rnd:
                node.mark = rnd
                seg.append(node)
                pert.setdefault(node.parent, []).append(node)
                node = node.parent
            hit = node
            for i, nd in enumerate(reversed(seg)):
                nd.depth = hit.depth + 1 + i
            if shallowest is None or hit.depth < shallowest.depth:
                shallowest = hit
        return shallowest if shallowest is not None else first

    def _process(self, node, is_root):
        """Apply the reduction templates; returns (state, replacement)
        or None on failure.

        The caller owns the child slot, so a node that must be rebuilt
        returns its replacement instead of patching the parent.  Partial
        results set full_end on the returned (Q) node.
        """
        if node.kind == _LEAF:
            return (_FULL, node)
        if node.kind == _P:
            return self._process_p(node, is_root)
        return self._process_q(node, is_root)

    def _recurse_children(self, node, replace):
        """Process node's pertinent children, applying replacements via
        the callback; returns {child: state} or None.

        A child's sibling links are snapshotted before recursing, because
        a child that rebuilds itself into a fresh Q clobbers them.
        """
        results = {}
        for ch in self._pert.get(node, ()):
            snap = (ch.nbrs[0], ch.nbrs[1])
            res = self._process(ch, False)
            if res is None:
                return None
            state, repl = res
            if repl is not ch:
                repl.mark = self._round
                replace(ch, repl, snap)
            results[repl] = state
        return results

    # ----- P templates -----

    def _process_p(self, node, is_root):
        def replace(ch, repl, _snap):
            del node.kids[ch]
            node.kids[repl] = None
            repl.parent = node

        results = self._recurse_children(node, replace)
        if results is None:
            return None
        fulls = [ch for ch, st in results.items() if st == _FULL]
        partials = [ch for ch, st in results.items() if st == _PARTIAL]
        num_empty = len(node.kids) - len(results)
        if len(partials) > 2 or (len(partials) > 1 and not is_root):
            return None

        if not partials:
            if num_empty == 0:
                return (_FULL, node)
            if is_root:
                if len(fulls) >= 2:
                    for f in fulls:
                        del node.kids[f]
                    grp = _new_p(fulls)
                    grp.mark = self._round
                    node.kids[grp] = None
                    grp.parent = node
                return (_PARTIAL, node)
            # non-root split: partial Q reading empties ... fulls
            for f in fulls:
                del node.kids[f]
            q = _new_q([self._shrink_to_group(node), _group(fulls)])
            q.full_end = q.ends[1]
            return (_PARTIAL, q)

        if len(partials) == 1:
            pq = partials[0]
            for f in fulls:
                del node.kids[f]
            if fulls:
                self._attach_at_end(pq, pq.full_end, _group(fulls), full_side=True)
            if is_root:
                self._absorb_single(node)
                return (_PARTIAL, node)
            del node.kids[pq]
            if node.kids:
                empty_end = pq.ends[1] if pq.ends[0] is pq.full_end else pq.ends[0]
                self._attach_at_end(
                    pq, empty_end, self._shrink_to_group(node), full_side=False
                )
            return (_PARTIAL, pq)

        # two partials (root only): merge into one Q reading
        # p1-empties .. p1-fulls .. grouped fulls .. p2-fulls .. p2-empties
        p1, p2 = partials
        for f in fulls:
            del node.kids[f]
        if fulls:
            self._attach_at_end(p1, p1.full_end, _group(fulls), full_side=True)
        self._concat_q(p1, p2)
        del node.kids[p2]
        self._absorb_single(node)
        return (_PARTIAL, node)

    def _shrink_to_group(self, node):
        """node (a P) reduced to a single covering node: itself, or its
        sole remaining child."""
        if len(node.kids) == 1:
            return next(iter(node.kids))
        return node

    # ----- Q helpers -----

    def _attach_at_end(self, q, end_child, new_node, full_side):
        """Extend q's child sequence one past the given endmost child."""
        i = q.ends.index(end_child)
        new_node.nbrs = [None, None]
        _link(end_child, new_node)
        new_node.parent = q
        q.ends[i] = new_node
        if full_side:
            q.full_end = new_node

    def _concat_q(self, p1, p2):
        """Merge p2's children into p1, full ends joined, so the merged
        sequence reads p1-empty .. full .. p2-empty."""
        e1 = p1.full_end
        e2 = p2.full_end
        far2 = p2.ends[1 - p2.ends.index(e2)]
        _link(e1, e2)
        p1.ends[p1.ends.index(e1)] = far2
        for ch in self._chain(far2):
            ch.parent = p1
        p2.ends = None

    def _splice(self, q, child, away):
        """Replace child (a partial Q) in q's child sequence by child's
        own children, empty side facing the neighbor `away` (possibly
        None, meaning past an end of q)."""
        n0, n1 = child.nbrs
        toward = n1 if n0 is away else n0
        full_head = child.full_end
        empty_head = child.ends[1 - child.ends.index(full_head)]
        for ch in self._chain(empty_head):
            ch.parent = q
        _relink(empty_head, None, away)
        _relink(full_head, None, toward)
        if away is not None:
            _relink(away, child, empty_head)
        if toward is not None:
            _relink(toward, child, full_head)
        for i, e in enumerate(q.ends):
            if e is child:
                q.ends[i] = empty_head if away is None else full_head
        child.ends = None

    def _replace_q_child(self, q, old, new, links=None):
        n0, n1 = links if links is not None else old.nbrs
        new.nbrs = [n0, n1]
        new.parent = q
        if n0 is not None:
            _relink(n0, old, new)
        if n1 is not None:
            _relink(n1, old, new)
        for i, e in enumerate(q.ends):
            if e is old:
                q.ends[i] = new

    # ----- Q templates -----

    def _process_q(self, node, is_root):
        rnd = self._round
        results = self._recurse_children(
            node, lambda ch, repl, snap: self._replace_q_child(node, ch, repl, snap)
        )
        if results is None:
            return None
        # the pertinent children must form one contiguous block; walk the
        # sibling list both ways from any of them
        start = next(iter(results))
        before = []
        after = []
        for direction, out in ((0, before), (1, after)):
            prev = start
            cur = start.nbrs[direction]
            while cur is not None and cur.mark == rnd:
                out.append(cur)
                nxt = cur.nbrs[1] if cur.nbrs[0] is prev else cur.nbrs[0]
                prev, cur = cur, nxt
        block = before[::-1] + [start] + after
        if len(block) != len(results):
            return None
        for ch in block[1:-1]:
            if results[ch] != _FULL:
                return None
        lo, hi = block[0], block[-1]
        lo_partial = results[lo] == _PARTIAL
        hi_partial = hi is not lo and results[hi] == _PARTIAL
        in_block = set(map(id, block))

        def away_of(part):
            """The neighbor the empty side must face: the non-block
            neighbor, preferring a real (empty) child over the outside."""
            candidates = [n for n in part.nbrs if n is None or id(n) not in in_block]
            real = [n for n in candidates if n is not None]
            return real[0] if real else None

        if is_root:
            # compute both away targets before splicing: the first splice
            # rewires the second partial's block-side neighbor
            away_lo = away_of(lo) if lo_partial else None
            away_hi = away_of(hi) if hi_partial else None
            if lo_partial:
                self._splice(node, lo, away_lo)
            if hi_partial:
                self._splice(node, hi, away_hi)
            return (_PARTIAL, node)

        if lo_partial and hi_partial:
            return None
        lo_at_end = node.ends[0] is lo or node.ends[1] is lo
        hi_at_end = node.ends[0] is hi or node.ends[1] is hi
        covers_all = (node.ends[0] is lo and node.ends[1] is hi) or (
            node.ends[0] is hi and node.ends[1] is lo
        )

        if covers_all:
            if not lo_partial and not hi_partial:
                return (_FULL, node)
            part = lo if lo_partial else hi
            other_end = node.ends[1 - node.ends.index(part)]
            self._splice(node, part, None)
            node.full_end = other_end
            return (_PARTIAL, node)

        # the block must reach exactly one end; a partial may only sit at
        # the block's inner extremity (empty side toward the empties),
        # except that a single-child block may itself be the end child
        if lo_at_end:
            end_idx = node.ends.index(lo)
            if lo_partial and lo is not hi:
                return None
        elif hi_at_end:
            end_idx = node.ends.index(hi)
            if hi_partial and lo is not hi:
                return None
        else:
            return None
        part = None
        if lo_partial:
            part = lo
        elif hi_partial:
            part = hi
        if part is not None:
            self._splice(node, part, away_of(part))
        node.full_end = node.ends[end_idx]
        return (_PARTIAL, node)

    # ----- cleanup -----

    def _absorb_single(self, node):
        """Replace a one-child P node by its child in node's parent."""
        if node.kind == _P and len(node.kids) == 1:
            child = next(iter(node.kids))
            parent = node.parent
            child.parent = parent
            if parent is None:
                if node is self.root:
                    self.root = child
            elif parent.kind == _P:
                del parent.kids[node]
                parent.kids[child] = None
            else:
                self._replace_q_child(parent, node, child)
