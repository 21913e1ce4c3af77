//! PQ-tree with the Booth–Lueker reduction templates.
//!
//! Children of every internal node form a doubly linked list whose sibling slots
//! carry no direction, so a Q-node can be read either way and splicing a partial
//! Q-node into its parent never copies a child list. Parent links go through a
//! union–find over "child sets": merging the children of one Q-node into another is
//! a single union, which keeps every parent query near-constant.

const NIL: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Leaf,
    P,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Empty,
    Full,
    Partial,
}

#[derive(Clone, Debug)]
struct Node {
    kind: Kind,
    sib: [usize; 2],
    ends: [usize; 2],
    n_children: usize,
    /// Child set this node belongs to; `NIL` for the root.
    pset: usize,
    /// Child set owned by this node (internal nodes only).
    own: usize,
}

/// A PQ-tree over the leaves `1..=n`.
pub struct PQTree {
    nodes: Vec<Node>,
    root: usize,
    n_leaves: usize,
    // union–find over child sets
    uf: Vec<usize>,
    owner: Vec<usize>,
    // per-reduction scratch, invalidated by bumping `epoch`
    epoch: u32,
    mark: Vec<u32>,
    label_epoch: Vec<u32>,
    label: Vec<Label>,
    count: Vec<usize>,
    full_end: Vec<usize>,
    vis_children: Vec<Vec<usize>>,
    touched: Vec<usize>,
}

impl PQTree {
    /// The universal tree: one P-node over all leaves.
    pub fn new(n: usize) -> Self {
        let mut t = PQTree {
            nodes: Vec::with_capacity(2 * n + 2),
            root: NIL,
            n_leaves: n,
            uf: Vec::new(),
            owner: Vec::new(),
            epoch: 0,
            mark: Vec::new(),
            label_epoch: Vec::new(),
            label: Vec::new(),
            count: Vec::new(),
            full_end: Vec::new(),
            vis_children: Vec::new(),
            touched: Vec::new(),
        };
        for _ in 0..n {
            t.new_node(Kind::Leaf);
        }
        match n {
            0 => {}
            1 => t.root = 0,
            _ => {
                let r = t.new_node(Kind::P);
                for leaf in 0..n {
                    t.push_back(r, leaf);
                }
                t.root = r;
            }
        }
        t
    }

    fn new_node(&mut self, kind: Kind) -> usize {
        let id = self.nodes.len();
        let own = if kind == Kind::Leaf {
            NIL
        } else {
            let s = self.uf.len();
            self.uf.push(s);
            self.owner.push(id);
            s
        };
        self.nodes.push(Node {
            kind,
            sib: [NIL, NIL],
            ends: [NIL, NIL],
            n_children: 0,
            pset: NIL,
            own,
        });
        self.mark.push(0);
        self.label_epoch.push(0);
        self.label.push(Label::Empty);
        self.count.push(0);
        self.full_end.push(1);
        self.vis_children.push(Vec::new());
        id
    }

    fn find(&mut self, mut s: usize) -> usize {
        let mut r = s;
        while self.uf[r] != r {
            r = self.uf[r];
        }
        while self.uf[s] != r {
            let next = self.uf[s];
            self.uf[s] = r;
            s = next;
        }
        r
    }

    fn parent(&mut self, v: usize) -> usize {
        let s = self.nodes[v].pset;
        if s == NIL {
            return NIL;
        }
        let r = self.find(s);
        self.owner[r]
    }

    /// Moves every child of `from` into the child set of `into`.
    fn union_into(&mut self, from: usize, into: usize) {
        let a = self.find(self.nodes[from].own);
        let b = self.find(self.nodes[into].own);
        if a != b {
            self.uf[a] = b;
        }
        self.owner[b] = into;
    }

    fn set_slot(&mut self, v: usize, old: usize, new: usize) {
        let s = &mut self.nodes[v].sib;
        if s[0] == old {
            s[0] = new;
        } else {
            debug_assert_eq!(s[1], old);
            s[1] = new;
        }
    }

    fn other_sib(&self, v: usize, one: usize) -> usize {
        let s = self.nodes[v].sib;
        if s[0] == one {
            s[1]
        } else {
            s[0]
        }
    }

    fn push_back(&mut self, parent: usize, c: usize) {
        self.add_at_end(parent, 1, c);
    }

    fn add_at_end(&mut self, parent: usize, end: usize, c: usize) {
        let old = self.nodes[parent].ends[end];
        self.nodes[c].sib = [old, NIL];
        self.nodes[c].pset = self.nodes[parent].own;
        if old == NIL {
            self.nodes[parent].ends = [c, c];
        } else {
            self.set_slot(old, NIL, c);
            self.nodes[parent].ends[end] = c;
        }
        self.nodes[parent].n_children += 1;
    }

    fn remove_child(&mut self, parent: usize, c: usize) {
        let [a, b] = self.nodes[c].sib;
        if a != NIL {
            self.set_slot(a, c, b);
        }
        if b != NIL {
            self.set_slot(b, c, a);
        }
        let ends = &mut self.nodes[parent].ends;
        if ends[0] == c && ends[1] == c {
            *ends = [NIL, NIL];
        } else if ends[0] == c {
            ends[0] = if a == NIL { b } else { a };
        } else if ends[1] == c {
            ends[1] = if a == NIL { b } else { a };
        }
        self.nodes[parent].n_children -= 1;
        self.nodes[c].sib = [NIL, NIL];
        self.nodes[c].pset = NIL;
    }

    /// Puts `new` where `old` sits, in `old`'s parent or as the root.
    fn replace(&mut self, old: usize, new: usize) {
        let p = self.parent(old);
        if p == NIL {
            self.root = new;
            self.nodes[new].pset = NIL;
            self.nodes[new].sib = [NIL, NIL];
            return;
        }
        let [a, b] = self.nodes[old].sib;
        self.nodes[new].sib = [a, b];
        self.nodes[new].pset = self.nodes[old].pset;
        if a != NIL {
            self.set_slot(a, old, new);
        }
        if b != NIL {
            self.set_slot(b, old, new);
        }
        let ends = &mut self.nodes[p].ends;
        for e in ends.iter_mut() {
            if *e == old {
                *e = new;
            }
        }
        self.nodes[old].sib = [NIL, NIL];
        self.nodes[old].pset = NIL;
    }

    /// Replaces the partial Q-node `y`, a child of `x`, by its own children: the
    /// empty end of `y` meets `empty_nb` (a sibling of `y`, or `NIL` for an end of `x`).
    fn splice(&mut self, x: usize, y: usize, empty_nb: usize) {
        let full_nb = self.other_sib(y, empty_nb);
        let fe = self.full_end[y];
        let yf = self.nodes[y].ends[fe];
        let ye = self.nodes[y].ends[1 - fe];
        self.set_slot(yf, NIL, full_nb);
        self.set_slot(ye, NIL, empty_nb);
        for (nb, inner) in [(full_nb, yf), (empty_nb, ye)] {
            if nb != NIL {
                self.set_slot(nb, y, inner);
            } else {
                let ends = &mut self.nodes[x].ends;
                if ends[0] == y {
                    ends[0] = inner;
                } else {
                    ends[1] = inner;
                }
            }
        }
        self.nodes[x].n_children += self.nodes[y].n_children - 1;
        self.union_into(y, x);
        self.nodes[y].n_children = 0;
        self.nodes[y].ends = [NIL, NIL];
    }

    fn is_marked(&self, v: usize) -> bool {
        self.mark[v] == self.epoch
    }

    fn label_of(&self, v: usize) -> Label {
        if self.label_epoch[v] == self.epoch {
            self.label[v]
        } else {
            Label::Empty
        }
    }

    fn set_label(&mut self, v: usize, l: Label) {
        self.label_epoch[v] = self.epoch;
        self.label[v] = l;
    }

    fn children(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes[v].n_children);
        let mut prev = NIL;
        let mut cur = self.nodes[v].ends[0];
        while cur != NIL {
            out.push(cur);
            let next = self.other_sib(cur, prev);
            prev = cur;
            cur = next;
        }
        out
    }

    /// Groups `nodes` (already detached) under a fresh P-node, or returns the single
    /// node itself.
    fn group(&mut self, nodes: &[usize], label: Label) -> usize {
        if nodes.len() == 1 {
            return nodes[0];
        }
        let p = self.new_node(Kind::P);
        for &c in nodes {
            self.push_back(p, c);
        }
        self.set_label(p, label);
        p
    }

    /// Restricts the tree to orders in which the leaves `set` (1-indexed) are
    /// consecutive. Returns `false` when no such order remains; the tree is then
    /// unusable.
    pub fn reduce(&mut self, set: &[usize]) -> bool {
        if set.len() <= 1 {
            return true;
        }
        self.epoch += 1;
        for t in std::mem::take(&mut self.touched) {
            self.vis_children[t].clear();
        }
        let Some(pert_root) = self.bubble(set) else {
            return false;
        };
        // post-order over the pertinent subtree
        let mut order = Vec::new();
        let mut stack = vec![(pert_root, false)];
        while let Some((v, done)) = stack.pop() {
            if done {
                order.push(v);
            } else {
                stack.push((v, true));
                for &c in &self.vis_children[v] {
                    stack.push((c, false));
                }
            }
        }
        for v in order {
            if self.nodes[v].kind == Kind::Leaf {
                self.set_label(v, Label::Full);
                continue;
            }
            let ok = if v == pert_root {
                self.reduce_root(v)
            } else {
                self.reduce_inner(v)
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Marks the union of leaf-to-root paths above `set`, stopping once every path has
    /// merged, and returns the pertinent root.
    fn bubble(&mut self, set: &[usize]) -> Option<usize> {
        let mut queue = std::collections::VecDeque::with_capacity(set.len());
        for &j in set {
            let leaf = j - 1;
            if self.is_marked(leaf) {
                return None;
            }
            self.mark[leaf] = self.epoch;
            queue.push_back(leaf);
        }
        let mut chains = set.len();
        let mut stalled_at_root = false;
        while chains > 1 {
            let v = queue.pop_front()?;
            let p = self.parent(v);
            if p == NIL {
                stalled_at_root = true;
                continue;
            }
            if self.vis_children[p].is_empty() {
                self.touched.push(p);
            }
            self.vis_children[p].push(v);
            if self.is_marked(p) {
                chains -= 1;
            } else {
                self.mark[p] = self.epoch;
                queue.push_back(p);
            }
        }
        let top = match queue.pop_front() {
            Some(v) => v,
            None if stalled_at_root => self.root,
            None => return None,
        };
        // leaf counts, children before parents
        let mut post = Vec::new();
        let mut stack = vec![(top, false)];
        while let Some((v, done)) = stack.pop() {
            if done {
                post.push(v);
            } else {
                stack.push((v, true));
                for &c in &self.vis_children[v] {
                    stack.push((c, false));
                }
            }
        }
        for &v in &post {
            self.count[v] = if self.nodes[v].kind == Kind::Leaf {
                1
            } else {
                self.vis_children[v].iter().map(|&c| self.count[c]).sum()
            };
        }
        let total = set.len();
        let mut r = top;
        if self.count[r] != total {
            return None;
        }
        while let Some(&c) = self.vis_children[r].iter().find(|&&c| self.count[c] == total) {
            r = c;
        }
        Some(r)
    }

    fn split_children(&self, v: usize) -> (Vec<usize>, Vec<usize>) {
        let mut full = Vec::new();
        let mut partial = Vec::new();
        for &c in &self.vis_children[v] {
            match self.label_of(c) {
                Label::Full => full.push(c),
                Label::Partial => partial.push(c),
                Label::Empty => {}
            }
        }
        (full, partial)
    }

    /// After `x` was replaced by `new`, the parent's pertinent-child list must name `new`.
    fn forward(&mut self, x: usize, new: usize) {
        let p = self.parent(new);
        if p != NIL {
            if let Some(slot) = self.vis_children[p].iter_mut().find(|c| **c == x) {
                *slot = new;
            }
        }
    }

    fn reduce_inner(&mut self, x: usize) -> bool {
        let (full, partial) = self.split_children(x);
        let n = self.nodes[x].n_children;
        match self.nodes[x].kind {
            Kind::P => {
                if partial.is_empty() && full.len() == n {
                    self.set_label(x, Label::Full);
                    return true;
                }
                match partial.len() {
                    0 => {
                        // P3
                        for &c in &full {
                            self.remove_child(x, c);
                        }
                        let full_node = self.group(&full, Label::Full);
                        let q = self.new_node(Kind::Q);
                        self.replace(x, q);
                        let empty_node = self.detach_rest(x);
                        self.push_back(q, empty_node);
                        self.push_back(q, full_node);
                        self.full_end[q] = 1;
                        self.set_label(q, Label::Partial);
                        self.forward(x, q);
                        true
                    }
                    1 => {
                        // P5
                        let y = partial[0];
                        self.remove_child(x, y);
                        for &c in &full {
                            self.remove_child(x, c);
                        }
                        self.replace(x, y);
                        if self.nodes[x].n_children > 0 {
                            let empty_node = self.detach_rest(x);
                            let fe = self.full_end[y];
                            self.add_at_end(y, 1 - fe, empty_node);
                        }
                        if !full.is_empty() {
                            let full_node = self.group(&full, Label::Full);
                            let fe = self.full_end[y];
                            self.add_at_end(y, fe, full_node);
                        }
                        self.forward(x, y);
                        true
                    }
                    _ => false,
                }
            }
            Kind::Q => {
                if partial.is_empty() && full.len() == n {
                    self.set_label(x, Label::Full);
                    return true;
                }
                if partial.len() > 1 {
                    return false;
                }
                let pertinent = full.len() + partial.len();
                for e in 0..2 {
                    if let Some((y, after)) = self.scan_from_end(x, e, pertinent) {
                        if y != NIL {
                            self.splice(x, y, after);
                        }
                        self.full_end[x] = e;
                        self.set_label(x, Label::Partial);
                        return true;
                    }
                }
                false
            }
            Kind::Leaf => unreachable!("leaves are labelled directly"),
        }
    }

    /// Walks `x`'s children from end `e` over full children and at most one trailing
    /// partial child. Succeeds when exactly `pertinent` children were consumed;
    /// returns the partial child (or `NIL`) and its neighbour away from the run.
    fn scan_from_end(&self, x: usize, e: usize, pertinent: usize) -> Option<(usize, usize)> {
        let mut prev = NIL;
        let mut cur = self.nodes[x].ends[e];
        let mut seen = 0;
        while cur != NIL && self.label_of(cur) == Label::Full {
            seen += 1;
            let next = self.other_sib(cur, prev);
            prev = cur;
            cur = next;
        }
        let mut partial = NIL;
        let mut after = NIL;
        if cur != NIL && self.label_of(cur) == Label::Partial {
            partial = cur;
            after = self.other_sib(cur, prev);
            seen += 1;
        }
        (seen == pertinent).then_some((partial, after))
    }

    fn reduce_root(&mut self, x: usize) -> bool {
        let (full, partial) = self.split_children(x);
        let n = self.nodes[x].n_children;
        match self.nodes[x].kind {
            Kind::P => {
                if partial.is_empty() && full.len() == n {
                    return true;
                }
                match partial.len() {
                    0 => {
                        // P2
                        if full.len() >= 2 {
                            for &c in &full {
                                self.remove_child(x, c);
                            }
                            let g = self.group(&full, Label::Full);
                            self.push_back(x, g);
                        }
                        true
                    }
                    1 => {
                        // P4
                        let y = partial[0];
                        if !full.is_empty() {
                            for &c in &full {
                                self.remove_child(x, c);
                            }
                            let g = self.group(&full, Label::Full);
                            let fe = self.full_end[y];
                            self.add_at_end(y, fe, g);
                        }
                        self.collapse_single(x);
                        true
                    }
                    2 => {
                        // P6
                        let (y1, y2) = (partial[0], partial[1]);
                        for &c in &full {
                            self.remove_child(x, c);
                        }
                        let fe1 = self.full_end[y1];
                        if !full.is_empty() {
                            let g = self.group(&full, Label::Full);
                            self.add_at_end(y1, fe1, g);
                        }
                        // y2 joins y1 with its full end first
                        self.remove_child(x, y2);
                        self.add_at_end(y1, fe1, y2);
                        self.splice(y1, y2, NIL);
                        self.collapse_single(x);
                        true
                    }
                    _ => false,
                }
            }
            Kind::Q => {
                if partial.is_empty() && full.len() == n {
                    return true;
                }
                if partial.len() > 2 {
                    return false;
                }
                let pertinent = full.len() + partial.len();
                let start = full.first().or(partial.first()).copied().unwrap();
                // extend the run from `start` in both directions over pertinent children
                let [s0, s1] = self.nodes[start].sib;
                let mut run_len = 1;
                let mut ext = [(start, NIL); 2];
                for (d, first) in [s0, s1].into_iter().enumerate() {
                    let mut prev = start;
                    let mut cur = first;
                    while cur != NIL && self.label_of(cur) != Label::Empty {
                        run_len += 1;
                        let next = self.other_sib(cur, prev);
                        prev = cur;
                        cur = next;
                    }
                    ext[d] = (prev, cur);
                }
                if run_len != pertinent {
                    return false;
                }
                // partial children may only sit at the two extremities of the run
                let extremities = [ext[0].0, ext[1].0];
                if partial.iter().any(|p| !extremities.contains(p)) {
                    return false;
                }
                if partial.len() == 2 && extremities[0] == extremities[1] {
                    return false;
                }
                for (d, &(tip, outside)) in ext.iter().enumerate() {
                    if self.label_of(tip) == Label::Partial && (d == 0 || tip != ext[0].0) {
                        self.splice(x, tip, outside);
                    }
                }
                true
            }
            Kind::Leaf => true,
        }
    }

    /// Detaches the remaining children of `x`: returns `x` itself when it still has
    /// two or more, else its only child.
    fn detach_rest(&mut self, x: usize) -> usize {
        if self.nodes[x].n_children == 1 {
            let c = self.nodes[x].ends[0];
            self.remove_child(x, c);
            c
        } else {
            x
        }
    }

    fn collapse_single(&mut self, x: usize) {
        if self.nodes[x].n_children == 1 {
            let c = self.nodes[x].ends[0];
            self.remove_child(x, c);
            self.replace(x, c);
        }
    }

    /// Leaf order of the frontier, 1-indexed.
    pub fn frontier(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n_leaves);
        if self.root == NIL {
            return out;
        }
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            if self.nodes[v].kind == Kind::Leaf {
                out.push(v + 1);
            } else {
                let kids = self.children(v);
                stack.extend(kids.into_iter().rev());
            }
        }
        out
    }
}
