//! Stallings foldings for finitely generated subgroups of a free group.
//!
//! The graph is built as a wedge of loops (one per generating word) and
//! folded to the basepointed core.  Each edge carries a rewriting
//! witness: a word over the subgroup's own generator alphabet.  The
//! invariant maintained through every fold is that for any loop at the
//! basepoint, substituting the generating words into the concatenated
//! edge witnesses yields exactly the word read along the loop.  This is
//! what makes [`SubgroupGraph::express`] constructive.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::word::{push_reduced, Alphabet, Letter, Word};

/// A word over the subgroup generator alphabet: `+i`/`-i` refer to the
/// `i`-th generating word (1-based) or its inverse.
pub type GenWord = Vec<i32>;

fn gen_inverse(w: &[i32]) -> GenWord {
    w.iter().rev().map(|&l| -l).collect()
}

fn gen_concat(parts: &[&[i32]]) -> GenWord {
    let mut out = Vec::new();
    for part in parts {
        for &l in *part {
            push_reduced(&mut out, l);
        }
    }
    out
}

/// Substitute the generating words into a [`GenWord`] and reduce.
pub fn substitute(rank: u16, generators: &[Word], expr: &[i32]) -> Word {
    let mut buf = Vec::new();
    for &l in expr {
        let g = &generators[(l.unsigned_abs() - 1) as usize];
        if l > 0 {
            for &a in g.letters() {
                push_reduced(&mut buf, a);
            }
        } else {
            for &a in g.letters().iter().rev() {
                push_reduced(&mut buf, -a);
            }
        }
    }
    Word::from_letters(rank, buf).expect("letters validated by generators")
}

#[derive(Debug, Clone)]
struct BuildEdge {
    origin: usize,
    terminus: usize,
    label: u16,
    witness: GenWord,
    alive: bool,
}

#[derive(Debug, Clone, Copy)]
struct Step {
    to: usize,
    edge: usize,
    forward: bool,
}

/// Folded basepointed core graph of a finitely generated subgroup.
#[derive(Debug, Clone)]
pub struct SubgroupGraph {
    rank: u16,
    generators: Vec<Word>,
    base: usize,
    adj: Vec<BTreeMap<Letter, Step>>,
    edges: Vec<(usize, u16, usize, GenWord)>,
}

impl SubgroupGraph {
    /// Fold the wedge of the given reduced generating words.
    pub fn fold(rank: u16, generators: &[Word]) -> SubgroupGraph {
        for g in generators {
            assert_eq!(g.rank(), rank, "generator rank mismatch");
        }
        Builder::new(rank, generators).run()
    }

    pub fn rank_ambient(&self) -> u16 {
        self.rank
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// First Betti number `|E| - |V| + 1`; the rank of the subgroup.
    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.adj.len()
    }

    /// Whether the graph is the rose on the whole ambient basis.
    pub fn is_whole_group(&self) -> bool {
        self.adj.len() == 1 && self.edges.len() == self.rank as usize
    }

    fn step(&self, at: usize, l: Letter) -> Option<Step> {
        self.adj[at].get(&l).copied()
    }

    fn trace(&self, w: &Word) -> Option<usize> {
        let mut at = self.base;
        for &l in w.letters() {
            at = self.step(at, l)?.to;
        }
        Some(at)
    }

    /// Membership: is the reduced word readable as a basepoint loop?
    pub fn contains(&self, w: &Word) -> bool {
        self.trace(w) == Some(self.base)
    }

    /// Constructive membership: a word over the generator alphabet that
    /// substitutes back to exactly `w` (when `w` is a member).
    pub fn express(&self, w: &Word) -> Option<GenWord> {
        let mut at = self.base;
        let mut out: GenWord = Vec::new();
        for &l in w.letters() {
            let step = self.step(at, l)?;
            let witness = &self.edges[step.edge].3;
            if step.forward {
                for &h in witness {
                    push_reduced(&mut out, h);
                }
            } else {
                for &h in witness.iter().rev() {
                    push_reduced(&mut out, -h);
                }
            }
            at = step.to;
        }
        (at == self.base).then_some(out)
    }

    /// Substitute this graph's generators into an expression.
    pub fn substitute(&self, expr: &[i32]) -> Word {
        substitute(self.rank, &self.generators, expr)
    }

    /// Complete invariant of the left coset `g·H`: greedily trace `g⁻¹`
    /// from the basepoint and record the stopping vertex together with
    /// the unread suffix.  Right-multiplying `g` by a member reroutes
    /// the fully readable prefix through the folded graph without
    /// changing where the trace falls off, so two words get the same
    /// key exactly when they lie in the same coset.
    pub fn coset_key(&self, g: &Word) -> (usize, Vec<Letter>) {
        let mut at = self.base;
        let inv = g.inverse();
        let ls = inv.letters();
        for (i, &l) in ls.iter().enumerate() {
            match self.step(at, l) {
                Some(step) => at = step.to,
                None => return (at, ls[i..].to_vec()),
            }
        }
        (at, Vec::new())
    }

    /// Isomorphism-invariant form for basepointed labeled graphs:
    /// vertices are already numbered by BFS from the basepoint in
    /// letter order, so the sorted edge list is canonical.
    pub fn canonical_form(&self) -> (usize, Vec<(usize, u16, usize)>) {
        let mut triples: Vec<(usize, u16, usize)> =
            self.edges.iter().map(|&(o, l, t, _)| (o, l, t)).collect();
        triples.sort_unstable();
        (self.adj.len(), triples)
    }

    /// DOT rendering of the folded graph for debugging.
    pub fn to_dot(&self, alphabet: &Alphabet) -> String {
        let mut s = String::from("digraph subgroup {\n");
        let _ = writeln!(s, "  v0 [shape=doublecircle];");
        for v in 0..self.adj.len() {
            if v != self.base {
                let _ = writeln!(s, "  v{v} [shape=circle];");
            }
        }
        for &(o, l, t, _) in &self.edges {
            let w = Word::from_letters(self.rank, [l as Letter]).expect("valid label");
            let _ = writeln!(s, "  v{o} -> v{t} [label=\"{}\"];", w.display(alphabet));
        }
        s.push_str("}\n");
        s
    }
}

struct Builder {
    rank: u16,
    generators: Vec<Word>,
    redirect: Vec<usize>,
    dead_vertex: Vec<bool>,
    incid: Vec<Vec<usize>>,
    edges: Vec<BuildEdge>,
    base: usize,
}

impl Builder {
    fn new(rank: u16, generators: &[Word]) -> Builder {
        let mut b = Builder {
            rank,
            generators: generators.to_vec(),
            redirect: vec![0],
            dead_vertex: vec![false],
            incid: vec![Vec::new()],
            edges: Vec::new(),
            base: 0,
        };
        for (gi, g) in generators.iter().enumerate() {
            if g.is_empty() {
                continue;
            }
            let mut prev = b.base;
            for (li, &l) in g.letters().iter().enumerate() {
                let next = if li + 1 == g.len() { b.base } else { b.new_vertex() };
                // the first edge of the loop carries the generator symbol
                let traversal_witness: GenWord =
                    if li == 0 { vec![(gi + 1) as i32] } else { Vec::new() };
                let eid = b.edges.len();
                if l > 0 {
                    b.edges.push(BuildEdge {
                        origin: prev,
                        terminus: next,
                        label: l as u16,
                        witness: traversal_witness,
                        alive: true,
                    });
                } else {
                    // stored with positive label; the loop traverses it backward
                    b.edges.push(BuildEdge {
                        origin: next,
                        terminus: prev,
                        label: (-l) as u16,
                        witness: gen_inverse(&traversal_witness),
                        alive: true,
                    });
                }
                b.incid[prev].push(eid);
                b.incid[next].push(eid);
                prev = next;
            }
        }
        b
    }

    fn new_vertex(&mut self) -> usize {
        let v = self.redirect.len();
        self.redirect.push(v);
        self.dead_vertex.push(false);
        self.incid.push(Vec::new());
        v
    }

    fn resolve(&self, mut v: usize) -> usize {
        while self.redirect[v] != v {
            v = self.redirect[v];
        }
        v
    }

    fn incident_live(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incid[v]
            .iter()
            .copied()
            .filter(|&e| self.edges[e].alive)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn run(mut self) -> SubgroupGraph {
        let mut work: Vec<usize> = (0..self.redirect.len()).collect();
        while let Some(v) = work.pop() {
            let v = self.resolve(v);
            'rescan: loop {
                let mut seen: BTreeMap<Letter, usize> = BTreeMap::new();
                for e in self.incident_live(v) {
                    let o = self.resolve(self.edges[e].origin);
                    let t = self.resolve(self.edges[e].terminus);
                    let label = self.edges[e].label as Letter;
                    let mut keys = Vec::new();
                    if o == v {
                        keys.push(label);
                    }
                    if t == v {
                        keys.push(-label);
                    }
                    for key in keys {
                        if let Some(&other) = seen.get(&key) {
                            if other != e {
                                self.fold_pair(v, key, other, e, &mut work);
                                continue 'rescan;
                            }
                        } else {
                            seen.insert(key, e);
                        }
                    }
                }
                break;
            }
        }
        self.trim();
        self.freeze()
    }

    /// Identify two traversals from `v` with the same signed label.
    fn fold_pair(
        &mut self,
        v: usize,
        key: Letter,
        mut keep: usize,
        mut del: usize,
        work: &mut Vec<usize>,
    ) {
        let far = |b: &Builder, e: usize| {
            if key > 0 {
                b.resolve(b.edges[e].terminus)
            } else {
                b.resolve(b.edges[e].origin)
            }
        };
        let mut v1 = far(self, keep);
        let mut v2 = far(self, del);
        if v1 == v2 {
            // parallel edges: both witnesses substitute to the same
            // group element, either may be kept
            self.edges[del].alive = false;
            work.push(v);
            return;
        }
        if v2 == self.base {
            core::mem::swap(&mut keep, &mut del);
            core::mem::swap(&mut v1, &mut v2);
        }
        // ambient-trivial connector from v1 to v2 in traversal direction
        let c: GenWord = if key > 0 {
            gen_concat(&[&gen_inverse(&self.edges[keep].witness), &self.edges[del].witness])
        } else {
            gen_concat(&[&self.edges[keep].witness, &gen_inverse(&self.edges[del].witness)])
        };
        self.edges[del].alive = false;
        let c_inv = gen_inverse(&c);
        for f in self.incident_live(v2) {
            let o = self.resolve(self.edges[f].origin) == v2;
            let t = self.resolve(self.edges[f].terminus) == v2;
            let w = self.edges[f].witness.clone();
            self.edges[f].witness = match (o, t) {
                (true, true) => gen_concat(&[&c, &w, &c_inv]),
                (true, false) => gen_concat(&[&c, &w]),
                (false, true) => gen_concat(&[&w, &c_inv]),
                (false, false) => unreachable!("edge not incident to merged vertex"),
            };
        }
        self.redirect[v2] = v1;
        let moved = core::mem::take(&mut self.incid[v2]);
        self.incid[v1].extend(moved);
        work.push(v1);
        work.push(self.resolve(v));
    }

    /// Remove non-basepoint vertices of degree ≤ 1 so every vertex lies
    /// on a reduced basepoint loop.
    fn trim(&mut self) {
        loop {
            let mut removed = false;
            for v in 0..self.redirect.len() {
                if self.dead_vertex[v] || self.resolve(v) != v || v == self.base {
                    continue;
                }
                let inc = self.incident_live(v);
                let mut degree = 0usize;
                for &e in &inc {
                    if self.resolve(self.edges[e].origin) == v {
                        degree += 1;
                    }
                    if self.resolve(self.edges[e].terminus) == v {
                        degree += 1;
                    }
                }
                if degree <= 1 {
                    for &e in &inc {
                        self.edges[e].alive = false;
                    }
                    self.dead_vertex[v] = true;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
    }

    fn freeze(self) -> SubgroupGraph {
        // adjacency on builder ids, checking foldedness
        let mut raw_adj: BTreeMap<usize, BTreeMap<Letter, (usize, usize, bool)>> = BTreeMap::new();
        raw_adj.entry(self.base).or_default();
        for (e, edge) in self.edges.iter().enumerate() {
            if !edge.alive {
                continue;
            }
            let o = self.resolve(edge.origin);
            let t = self.resolve(edge.terminus);
            let l = edge.label as Letter;
            let prev = raw_adj.entry(o).or_default().insert(l, (t, e, true));
            assert!(prev.is_none(), "graph not folded at freeze");
            let prev = raw_adj.entry(t).or_default().insert(-l, (o, e, false));
            assert!(prev.is_none(), "graph not folded at freeze");
        }
        // canonical vertex numbering: BFS from the basepoint in letter order
        let mut number: BTreeMap<usize, usize> = BTreeMap::new();
        number.insert(self.base, 0);
        let mut order = vec![self.base];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            if let Some(nbrs) = raw_adj.get(&v) {
                for (_, &(to, _, _)) in nbrs.iter() {
                    if !number.contains_key(&to) {
                        number.insert(to, order.len());
                        order.push(to);
                    }
                }
            }
        }
        let mut edges: Vec<(usize, u16, usize, GenWord)> = Vec::new();
        let mut edge_number: BTreeMap<usize, usize> = BTreeMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            if !edge.alive {
                continue;
            }
            let o = self.resolve(edge.origin);
            let t = self.resolve(edge.terminus);
            debug_assert!(number.contains_key(&o) && number.contains_key(&t));
            edge_number.insert(e, edges.len());
            edges.push((number[&o], edge.label, number[&t], edge.witness.clone()));
        }
        let mut adj: Vec<BTreeMap<Letter, Step>> = vec![BTreeMap::new(); order.len()];
        for (v, nbrs) in &raw_adj {
            for (&l, &(to, e, forward)) in nbrs {
                adj[number[v]].insert(
                    l,
                    Step { to: number[&to], edge: edge_number[&e], forward },
                );
            }
        }
        SubgroupGraph {
            rank: self.rank,
            generators: self.generators,
            base: 0,
            adj,
            edges,
        }
    }
}
