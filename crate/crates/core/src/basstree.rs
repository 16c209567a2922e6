//! Finite windows of the dual tree of a one-edge splitting.
//!
//! Vertices are cosets of the vertex group(s); oriented edges carry a
//! conjugator and a direction so the orientation map can be evaluated
//! exactly.  Vertex degrees are infinite, so a window enumerates only
//! the cosets admitting a representative of bounded word length.  The
//! tree-level twist and its inverse are evaluated on windows, and the
//! conjugation action on group elements is computed algebraically from
//! normal forms, which is what the formula-level twist is checked
//! against.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::splitting::{AdaptedSplitting, NormalForm, Side};
use crate::word::{enumerate_ball, Alphabet, Letter, Word};

/// An oriented edge of the dual tree.  The underlying edge is the
/// `conjugator`-translate of the base edge; `direction` is `+1` when
/// the edge is crossed in the stable direction (HNN: toward the vertex
/// `conjugator·V`; amalgam: from the left factor to the right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedEdge {
    pub conjugator: Word,
    pub direction: i8,
}

impl OrientedEdge {
    /// The orientation-reversing involution.
    pub fn reversed(&self) -> OrientedEdge {
        OrientedEdge { conjugator: self.conjugator.clone(), direction: -self.direction }
    }

    /// The translate `w·e`.
    pub fn translated(&self, w: &Word) -> OrientedEdge {
        OrientedEdge { conjugator: w.mul(&self.conjugator), direction: self.direction }
    }
}

/// The orientation map: `o(e) = h · edge^{±1} · h⁻¹` with the sign
/// selected by the edge direction and the splitting's orientation.
/// Free splittings carry no orientation map.
pub fn orientation_word(s: &AdaptedSplitting, e: &OrientedEdge) -> Option<Word> {
    let edge = s.edge_word()?;
    let exp = e.direction as i64 * s.orientation_sign();
    Some(edge.pow(exp).conjugated(&e.conjugator))
}

/// The o-words along the tree geodesic from the base vertex (the
/// identity coset of the (left) vertex group) to the `w`-translate of
/// the base vertex, read off the normal form of `w`.
pub fn geodesic_orientation_words(s: &AdaptedSplitting, w: &Word) -> Vec<Word> {
    debug_assert!(s.is_z());
    let rank = s.rank();
    match s.normal_form(w) {
        NormalForm::Britton { head, steps } => {
            let stable = s.stable_word().expect("HNN shape").clone();
            let mut out = Vec::with_capacity(steps.len());
            let mut prefix = head.value;
            for (sign, syl) in steps {
                let e = if sign > 0 {
                    OrientedEdge { conjugator: prefix.mul(&stable), direction: 1 }
                } else {
                    OrientedEdge { conjugator: prefix.clone(), direction: -1 }
                };
                out.push(orientation_word(s, &e).expect("Z-splitting"));
                let t = if sign > 0 { stable.clone() } else { stable.inverse() };
                prefix = Word::product(rank, [&prefix, &t, &syl.value]);
            }
            out
        }
        NormalForm::Alternating { syllables } => {
            // each right-factor syllable enters and leaves a right
            // vertex, crossing two edges
            let mut out = Vec::new();
            let mut prefix = Word::identity(rank);
            for (side, syl) in syllables {
                match side {
                    Side::Left => prefix = prefix.mul(&syl.value),
                    Side::Right => {
                        let enter = OrientedEdge { conjugator: prefix.clone(), direction: 1 };
                        out.push(orientation_word(s, &enter).expect("Z-splitting"));
                        prefix = prefix.mul(&syl.value);
                        let leave = OrientedEdge { conjugator: prefix.clone(), direction: -1 };
                        out.push(orientation_word(s, &leave).expect("Z-splitting"));
                    }
                }
            }
            out
        }
    }
}

/// The conjugation action of the tree twist based at the identity
/// coset: `w ↦ o(e₁)⋯o(e_k)·w` along the geodesic to the `w`-translate
/// of the base vertex.  This is the tree-level automorphism.
pub fn conjugation_action(s: &AdaptedSplitting, w: &Word) -> Word {
    let os = geodesic_orientation_words(s, w);
    let mut acc = Word::identity(s.rank());
    for o in &os {
        acc = acc.mul(o);
    }
    acc.mul(w)
}

#[derive(Debug, Clone)]
pub struct WindowVertex {
    pub rep: Word,
    pub side: Side,
}

/// A finite piece of the dual tree: all cosets with representatives of
/// length at most the build bound, plus any vertices reached later by
/// twisting (the window auto-extends).
pub struct TreeWindow<'a> {
    splitting: &'a AdaptedSplitting,
    vertices: Vec<WindowVertex>,
    keys: BTreeMap<(u8, usize, Vec<Letter>), usize>,
    adj: Vec<Vec<usize>>,
}

impl<'a> TreeWindow<'a> {
    /// Build the window of all cosets with representatives of length
    /// `≤ rep_bound`.  The base vertex (identity coset of the left
    /// factor) is vertex `0`.
    pub fn build(splitting: &'a AdaptedSplitting, rep_bound: usize) -> TreeWindow<'a> {
        let mut win = TreeWindow {
            splitting,
            vertices: Vec::new(),
            keys: BTreeMap::new(),
            adj: Vec::new(),
        };
        let sides: &[Side] = if splitting.has_two_factors() {
            &[Side::Left, Side::Right]
        } else {
            &[Side::Left]
        };
        for g in enumerate_ball(splitting.rank(), rep_bound) {
            for &side in sides {
                win.find_or_insert(&g, side);
            }
        }
        win
    }

    pub fn splitting(&self) -> &AdaptedSplitting {
        self.splitting
    }

    pub fn base(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &WindowVertex {
        &self.vertices[i]
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    fn coset_key(&self, rep: &Word, side: Side) -> (u8, usize, Vec<Letter>) {
        let graph = self.splitting.factor_graph(side);
        let (v, rest) = graph.coset_key(rep);
        (matches!(side, Side::Right) as u8, v, rest)
    }

    /// Look up the coset of `rep` on the given side, inserting a new
    /// window vertex (with adjacency) if it is not yet present.
    pub fn find_or_insert(&mut self, rep: &Word, side: Side) -> usize {
        let key = self.coset_key(rep, side);
        if let Some(&i) = self.keys.get(&key) {
            return i;
        }
        let i = self.vertices.len();
        self.vertices.push(WindowVertex { rep: rep.clone(), side });
        self.keys.insert(key, i);
        self.adj.push(Vec::new());
        for j in 0..i {
            if self.edge_between(j, i).is_some() {
                self.adj[i].push(j);
                self.adj[j].push(i);
            }
        }
        i
    }

    pub fn find(&self, rep: &Word, side: Side) -> Option<usize> {
        self.keys.get(&self.coset_key(rep, side)).copied()
    }

    /// The `w`-translate of a window vertex.
    pub fn translate_vertex(&mut self, w: &Word, v: usize) -> usize {
        let rep = w.mul(&self.vertices[v].rep);
        let side = self.vertices[v].side;
        self.find_or_insert(&rep, side)
    }

    /// The oriented edge from `u` to `v`, when the cosets are adjacent
    /// in the tree.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<OrientedEdge> {
        let (wu, wv) = (&self.vertices[u], &self.vertices[v]);
        let z = wu.rep.inverse().mul(&wv.rep);
        if self.splitting.has_two_factors() {
            if wu.side == wv.side {
                return None;
            }
            // normalize to left → right, reverse afterwards if needed
            if wu.side == Side::Right {
                return self.edge_between(v, u).map(|e| e.reversed());
            }
            match self.splitting.normal_form(&z) {
                NormalForm::Alternating { syllables } => match syllables.as_slice() {
                    [] => Some(OrientedEdge { conjugator: wu.rep.clone(), direction: 1 }),
                    [(Side::Left, a)] => Some(OrientedEdge {
                        conjugator: wu.rep.mul(&a.value),
                        direction: 1,
                    }),
                    [(Side::Right, _)] => {
                        Some(OrientedEdge { conjugator: wu.rep.clone(), direction: 1 })
                    }
                    [(Side::Left, a), (Side::Right, _)] => Some(OrientedEdge {
                        conjugator: wu.rep.mul(&a.value),
                        direction: 1,
                    }),
                    _ => None,
                },
                NormalForm::Britton { .. } => unreachable!("amalgam shape"),
            }
        } else {
            match self.splitting.normal_form(&z) {
                NormalForm::Britton { head, steps } => match steps.as_slice() {
                    [(sign, _)] => {
                        let stable = self.splitting.stable_word().expect("HNN shape");
                        if *sign > 0 {
                            Some(OrientedEdge {
                                conjugator: Word::product(
                                    self.splitting.rank(),
                                    [&wu.rep, &head.value, stable],
                                ),
                                direction: 1,
                            })
                        } else {
                            Some(OrientedEdge {
                                conjugator: wu.rep.mul(&head.value),
                                direction: -1,
                            })
                        }
                    }
                    _ => None,
                },
                NormalForm::Alternating { .. } => unreachable!("HNN shape"),
            }
        }
    }

    /// Unique reduced edge path between window vertices, if both ends
    /// are connected inside the window.
    pub fn geodesic(&self, from: usize, to: usize) -> Option<Vec<(usize, usize)>> {
        if from == to {
            return Some(Vec::new());
        }
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = vec![from];
        let mut head = 0;
        prev.insert(from, from);
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &n in &self.adj[v] {
                if !prev.contains_key(&n) {
                    prev.insert(n, v);
                    if n == to {
                        let mut path = Vec::new();
                        let mut cur = to;
                        while cur != from {
                            let p = prev[&cur];
                            path.push((p, cur));
                            cur = p;
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push(n);
                }
            }
        }
        None
    }

    /// Tree distances inside the window.
    pub fn distances_from(&self, from: usize) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::new();
        dist.insert(from, 0usize);
        let mut queue = vec![from];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let d = dist[&v];
            for &n in &self.adj[v] {
                if !dist.contains_key(&n) {
                    dist.insert(n, d + 1);
                    queue.push(n);
                }
            }
        }
        dist
    }

    /// Product of o-words along the geodesic from `base` to `v`,
    /// inverting each factor for the inverse twist.
    pub fn o_product(&self, base: usize, v: usize, inverted: bool) -> Option<Word> {
        let path = self.geodesic(base, v)?;
        let mut acc = Word::identity(self.splitting.rank());
        for (a, b) in path {
            let e = self.edge_between(a, b).expect("path edges exist");
            let o = orientation_word(self.splitting, &e).expect("Z-splitting");
            acc = if inverted { acc.mul(&o.inverse()) } else { acc.mul(&o) };
        }
        Some(acc)
    }

    /// The tree twist based at `base`: `v ↦ o(e₁)⋯o(e_k)·v` along the
    /// geodesic from `base` to `v`.  The image may lie outside the
    /// initial window; it is inserted on demand.
    pub fn twist_vertex(&mut self, base: usize, v: usize) -> Option<usize> {
        let prod = self.o_product(base, v, false)?;
        Some(self.translate_vertex(&prod, v))
    }

    /// The inverse tree twist: `v ↦ o(e₁)⁻¹⋯o(e_k)⁻¹·v`.
    pub fn twist_vertex_inverse(&mut self, base: usize, v: usize) -> Option<usize> {
        let prod = self.o_product(base, v, true)?;
        Some(self.translate_vertex(&prod, v))
    }

    /// DOT rendering with twist-image annotations.
    pub fn to_dot(&mut self, alphabet: &Alphabet) -> String {
        let n = self.len();
        let mut s = String::from("graph window {\n");
        for i in 0..n {
            let image = self.twist_vertex(self.base(), i);
            let v = &self.vertices[i];
            let rep = if v.rep.is_empty() {
                String::from("1")
            } else {
                v.rep.display(alphabet)
            };
            let side = match v.side {
                Side::Left => "L",
                Side::Right => "R",
            };
            let annot = match image {
                Some(img) if img != i => format!(" -> v{img}"),
                _ => String::new(),
            };
            let _ = writeln!(s, "  v{i} [label=\"{side}:{rep}{annot}\"];");
        }
        for i in 0..n {
            for &j in &self.adj[i] {
                if i < j && j < n {
                    let _ = writeln!(s, "  v{i} -- v{j};");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::twist::Automorphism;

    fn w2(s: &str) -> Word {
        Word::parse(s, &Alphabet::new("xy").unwrap()).unwrap()
    }

    #[test]
    fn orientation_axioms_t1() {
        let t1 = fixtures::t1().adapt().unwrap();
        let base = OrientedEdge { conjugator: w2("y"), direction: 1 };
        // base edge toward yV crossed in the stable direction: o = y·x·y⁻¹
        assert_eq!(orientation_word(&t1, &base).unwrap(), w2("yxY"));
        // reversal inverts
        assert_eq!(
            orientation_word(&t1, &base.reversed()).unwrap(),
            w2("yxY").inverse()
        );
        // translation conjugates, exactly
        for w in ["x", "y", "xy", "Yx", "xxY"] {
            let w = w2(w);
            let e = base.translated(&w);
            assert_eq!(
                orientation_word(&t1, &e).unwrap(),
                orientation_word(&t1, &base).unwrap().conjugated(&w)
            );
        }
        // outward edge at the base vertex: o = x⁻¹ for positive orientation
        let out = OrientedEdge { conjugator: Word::identity(2), direction: -1 };
        assert_eq!(orientation_word(&t1, &out).unwrap(), w2("X"));
    }

    #[test]
    fn free_splitting_has_no_orientation() {
        use crate::splitting::{Orientation, SplittingDatum, SplittingKind};
        let s = SplittingDatum {
            rank: 2,
            kind: SplittingKind::FreeHnn { vertex_gens: vec![w2("y")], stable: w2("x") },
            orientation: Orientation::Positive,
        }
        .adapt()
        .unwrap();
        let e = OrientedEdge { conjugator: Word::identity(2), direction: 1 };
        assert!(orientation_word(&s, &e).is_none());
    }

    #[test]
    fn conjugation_action_examples() {
        let t1 = fixtures::t1().adapt().unwrap();
        // elliptic words are fixed
        assert_eq!(conjugation_action(&t1, &w2("x")), w2("x"));
        assert_eq!(conjugation_action(&t1, &w2("yxY")), w2("yxY"));
        // the stable letter picks up the edge element
        assert_eq!(conjugation_action(&t1, &w2("y")), w2("yx"));
        assert_eq!(conjugation_action(&t1, &w2("Y")), w2("XY"));
    }

    #[test]
    fn conjugation_action_matches_formula_twist() {
        for d in [fixtures::t1(), fixtures::t2(), fixtures::s2()] {
            let s = d.adapt().unwrap();
            let tw = Automorphism::from_splitting(&s).unwrap();
            for w in enumerate_ball(2, 4) {
                assert_eq!(
                    conjugation_action(&s, &w),
                    tw.apply(&w),
                    "disagree on {w:?} for {:?}",
                    s.datum().kind
                );
            }
        }
    }

    #[test]
    fn window_basics_t1() {
        let t1 = fixtures::t1().adapt().unwrap();
        let mut win = TreeWindow::build(&t1, 4);
        assert!(win.len() > 3);
        // v₀ → v₀: empty geodesic
        assert_eq!(win.geodesic(0, 0).unwrap().len(), 0);
        // v₀ → yV: one edge
        let yv = win.find(&w2("y"), Side::Left).unwrap();
        assert_eq!(win.geodesic(0, yv).unwrap().len(), 1);
        // v₀ → y²V: two edges
        let yyv = win.find(&w2("yy"), Side::Left).unwrap();
        assert_eq!(win.geodesic(0, yyv).unwrap().len(), 2);
        // x is in the vertex group: xV = V
        assert_eq!(win.find(&w2("x"), Side::Left).unwrap(), 0);
        // twist fixes the base vertex
        assert_eq!(win.twist_vertex(0, 0).unwrap(), 0);
        // twist at yV translates by o(e₁) = yxy⁻¹: image is yx·V
        let img = win.twist_vertex(0, yv).unwrap();
        let expect = win.find_or_insert(&w2("yx"), Side::Left);
        assert_eq!(img, expect);
    }

    #[test]
    fn window_amalgam_bipartite() {
        let s2 = fixtures::s2().adapt().unwrap();
        let win = TreeWindow::build(&s2, 3);
        // base edge joins the two identity cosets
        let right_base = win.find(&Word::identity(2), Side::Right).unwrap();
        let e = win.edge_between(0, right_base).unwrap();
        assert_eq!(e.direction, 1);
        // adjacency only across sides
        for i in 0..win.len() {
            for &j in win.neighbors(i) {
                assert!(!matches!(
                    (win.vertex(i).side, win.vertex(j).side),
                    (Side::Left, Side::Left) | (Side::Right, Side::Right)
                ));
            }
        }
    }

    #[test]
    fn twist_inverse_composes_to_identity() {
        for d in [fixtures::t1(), fixtures::s2()] {
            let s = d.adapt().unwrap();
            let mut win = TreeWindow::build(&s, 3);
            let dist = win.distances_from(0);
            let vs: Vec<usize> = dist
                .iter()
                .filter(|&(_, &d)| d <= 3)
                .map(|(&v, _)| v)
                .collect();
            for v in vs {
                let img = win.twist_vertex(0, v).unwrap();
                let back = win.twist_vertex_inverse(0, img).unwrap();
                assert_eq!(back, v, "inverse fails at vertex {v}");
            }
        }
    }

    #[test]
    fn adjacency_preserved_by_twist() {
        let t1 = fixtures::t1().adapt().unwrap();
        let mut win = TreeWindow::build(&t1, 3);
        let n = win.len();
        for u in 0..n {
            let nbrs: Vec<usize> = win.neighbors(u).to_vec();
            for v in nbrs {
                if v >= n {
                    continue;
                }
                let iu = win.twist_vertex(0, u).unwrap();
                let iv = win.twist_vertex(0, v).unwrap();
                assert!(
                    win.edge_between(iu, iv).is_some(),
                    "images of adjacent {u},{v} not adjacent"
                );
            }
        }
    }

    #[test]
    fn conjugated_twist_is_twist_at_translated_base() {
        let t1 = fixtures::t1().adapt().unwrap();
        let mut win = TreeWindow::build(&t1, 3);
        for w in ["x", "y", "Y", "xy"] {
            let w = w2(w);
            let wbase = win.translate_vertex(&w, 0);
            let n = win.len().min(12);
            for v in 0..n {
                // w·δ_{v₀}(w⁻¹·v) must equal δ_{w·v₀}(v)
                let tv = win.translate_vertex(&w.inverse(), v);
                let lhs_inner = match win.twist_vertex(0, tv) {
                    Some(i) => i,
                    None => continue,
                };
                let lhs = win.translate_vertex(&w, lhs_inner);
                let rhs = match win.twist_vertex(wbase, v) {
                    Some(i) => i,
                    None => continue,
                };
                assert_eq!(lhs, rhs, "conjugation relation fails at v={v}, w={w:?}");
            }
        }
    }

    #[test]
    fn path_independence_with_backtrack() {
        let t1 = fixtures::t1().adapt().unwrap();
        let win = TreeWindow::build(&t1, 3);
        for v in 0..win.len().min(10) {
            let path = match win.geodesic(0, v) {
                Some(p) => p,
                None => continue,
            };
            let straight = win.o_product(0, v, false).unwrap();
            // insert a backtrack over some incident edge at the start
            if let Some(&n) = win.neighbors(0).first() {
                let e = win.edge_between(0, n).unwrap();
                let mut words = vec![
                    orientation_word(&t1, &e).unwrap(),
                    orientation_word(&t1, &e.reversed()).unwrap(),
                ];
                for (a, b) in &path {
                    let e = win.edge_between(*a, *b).unwrap();
                    words.push(orientation_word(&t1, &e).unwrap());
                }
                let mut acc = Word::identity(2);
                for w in &words {
                    acc = acc.mul(w);
                }
                assert_eq!(acc, straight, "backtracked product differs at v={v}");
            }
        }
    }
}
