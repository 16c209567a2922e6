//! One-edge splittings of a free group as graph-of-groups data.
//!
//! A splitting is an HNN extension over a cyclic (or trivial) edge
//! group, or an amalgam over a cyclic (or trivial) edge group.  The
//! trivial-edge variants are the free splittings that play the role of
//! spheres.  Validation checks the necessary "adapted" conditions:
//! nontrivial edge elements that lie in their vertex groups, the Euler
//! characteristic count, the defining relation for HNN data, and that
//! the pieces generate the whole group.  Normal forms are computed by
//! expressing a word over the splitting's generators and removing
//! pinches; translation length is the stable-letter (or syllable) count
//! of the cyclically reduced form, which realizes the intersection
//! number of a conjugacy class with the splitting.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::subgroup::{GenWord, SubgroupGraph};
use crate::word::{ConjClass, Word};

/// Twistor direction of an oriented splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// The four supported one-edge shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplittingKind {
    /// HNN extension over `⟨edge_a⟩` with `stable · edge_a · stable⁻¹ = edge_b`.
    Hnn {
        vertex_gens: Vec<Word>,
        stable: Word,
        edge_a: Word,
        edge_b: Word,
    },
    /// Amalgam over `⟨edge⟩` with the edge element in both factors.
    Amalgam {
        left_gens: Vec<Word>,
        right_gens: Vec<Word>,
        edge: Word,
    },
    /// Free HNN splitting (trivial edge group).
    FreeHnn { vertex_gens: Vec<Word>, stable: Word },
    /// Free amalgam splitting (trivial edge group).
    FreeAmalgam {
        left_gens: Vec<Word>,
        right_gens: Vec<Word>,
    },
}

/// Graph-of-groups datum for a one-edge splitting, plus an orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingDatum {
    pub rank: u16,
    pub kind: SplittingKind,
    pub orientation: Orientation,
}

/// One validation check outcome.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail report for every adaptedness invariant.
#[derive(Debug, Clone)]
pub struct ValidityReport {
    pub checks: Vec<Check>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} {}{}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) }
            )?;
        }
        Ok(())
    }
}

impl SplittingDatum {
    pub fn is_z_splitting(&self) -> bool {
        matches!(self.kind, SplittingKind::Hnn { .. } | SplittingKind::Amalgam { .. })
    }

    pub fn is_hnn_shape(&self) -> bool {
        matches!(self.kind, SplittingKind::Hnn { .. } | SplittingKind::FreeHnn { .. })
    }

    /// Same splitting with the opposite twistor direction.
    pub fn reversed(&self) -> SplittingDatum {
        SplittingDatum {
            rank: self.rank,
            kind: self.kind.clone(),
            orientation: self.orientation.reversed(),
        }
    }

    /// Run every adaptedness check and report the outcomes.
    pub fn validate(&self) -> ValidityReport {
        let g = self.rank;
        let mut checks = Vec::new();
        let mut push = |name: &'static str, passed: bool, detail: String| {
            checks.push(Check { name, passed, detail });
        };
        match &self.kind {
            SplittingKind::Hnn { vertex_gens, stable, edge_a, edge_b } => {
                push("stable_nontrivial", !stable.is_empty(), String::new());
                push(
                    "edge_nontrivial",
                    !edge_a.is_empty() && !edge_b.is_empty(),
                    String::new(),
                );
                let vg = SubgroupGraph::fold(g, vertex_gens);
                push(
                    "edge_in_vertex_group",
                    vg.contains(edge_a) && vg.contains(edge_b),
                    String::from("edge elements must lie in the vertex group"),
                );
                let relation = stable.mul(edge_a).mul(&stable.inverse()) == *edge_b;
                push(
                    "relation_holds",
                    relation,
                    String::from("stable · a · stable⁻¹ must equal b"),
                );
                push(
                    "euler_characteristic",
                    vg.rank() == g as usize,
                    format!("vertex group rank {} must equal {}", vg.rank(), g),
                );
                let mut all = vertex_gens.clone();
                all.push(stable.clone());
                push(
                    "generates_whole_group",
                    SubgroupGraph::fold(g, &all).is_whole_group(),
                    String::new(),
                );
            }
            SplittingKind::FreeHnn { vertex_gens, stable } => {
                push("stable_nontrivial", !stable.is_empty(), String::new());
                let vg = SubgroupGraph::fold(g, vertex_gens);
                push(
                    "euler_characteristic",
                    vg.rank() + 1 == g as usize,
                    format!("vertex group rank {} must equal {}", vg.rank(), g - 1),
                );
                let mut all = vertex_gens.clone();
                all.push(stable.clone());
                push(
                    "generates_whole_group",
                    SubgroupGraph::fold(g, &all).is_whole_group(),
                    String::new(),
                );
            }
            SplittingKind::Amalgam { left_gens, right_gens, edge } => {
                push("edge_nontrivial", !edge.is_empty(), String::new());
                let lg = SubgroupGraph::fold(g, left_gens);
                let rg = SubgroupGraph::fold(g, right_gens);
                push(
                    "edge_in_vertex_group",
                    lg.contains(edge) && rg.contains(edge),
                    String::from("edge element must lie in both factors"),
                );
                push(
                    "euler_characteristic",
                    lg.rank() + rg.rank() == g as usize + 1,
                    format!("factor ranks {} + {} must equal {}", lg.rank(), rg.rank(), g + 1),
                );
                let mut all = left_gens.clone();
                all.extend(right_gens.iter().cloned());
                push(
                    "generates_whole_group",
                    SubgroupGraph::fold(g, &all).is_whole_group(),
                    String::new(),
                );
            }
            SplittingKind::FreeAmalgam { left_gens, right_gens } => {
                let lg = SubgroupGraph::fold(g, left_gens);
                let rg = SubgroupGraph::fold(g, right_gens);
                push(
                    "euler_characteristic",
                    lg.rank() + rg.rank() == g as usize,
                    format!("factor ranks {} + {} must equal {}", lg.rank(), rg.rank(), g),
                );
                let mut all = left_gens.clone();
                all.extend(right_gens.iter().cloned());
                push(
                    "generates_whole_group",
                    SubgroupGraph::fold(g, &all).is_whole_group(),
                    String::new(),
                );
            }
        }
        ValidityReport { checks }
    }

    /// Validate and precompute the folded graphs needed by every
    /// downstream operation.
    pub fn adapt(self) -> Result<AdaptedSplitting, ValidityReport> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(report);
        }
        Ok(AdaptedSplitting::build(self))
    }
}

/// Which factor a syllable of an amalgam normal form lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Vertex-group element of a normal form: an expression over the
/// splitting's generator alphabet together with its ambient value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    pub expr: GenWord,
    pub value: Word,
}

impl Syllable {
    fn empty(rank: u16) -> Syllable {
        Syllable { expr: Vec::new(), value: Word::identity(rank) }
    }

    fn concat(parts: &[&Syllable], rank: u16) -> Syllable {
        let mut expr = Vec::new();
        for p in parts {
            for &l in &p.expr {
                crate::word::push_reduced(&mut expr, l);
            }
        }
        let value = Word::product(rank, parts.iter().map(|p| &p.value));
        Syllable { expr, value }
    }
}

/// Pinch-free normal form of a word relative to a splitting.
#[derive(Debug, Clone)]
pub enum NormalForm {
    /// `head · t^{s₁} · v₁ · … · t^{s_m} · v_m` with no pinch.
    Britton { head: Syllable, steps: Vec<(i8, Syllable)> },
    /// Alternating factor syllables with no interior edge syllable.
    Alternating { syllables: Vec<(Side, Syllable)> },
}

impl NormalForm {
    /// Edge crossings of the geodesic from the base vertex: stable
    /// letters crossed (HNN) or syllable boundaries (amalgam).
    pub fn crossings(&self) -> usize {
        match self {
            NormalForm::Britton { steps, .. } => steps.len(),
            NormalForm::Alternating { syllables } => syllables.len().saturating_sub(1),
        }
    }

    pub fn stable_signs(&self) -> Vec<i8> {
        match self {
            NormalForm::Britton { steps, .. } => steps.iter().map(|&(s, _)| s).collect(),
            NormalForm::Alternating { .. } => Vec::new(),
        }
    }
}

/// A validated splitting with its folded graphs precomputed.
#[derive(Debug, Clone)]
pub struct AdaptedSplitting {
    datum: SplittingDatum,
    /// Fold of all generators; HNN-like: vertex gens then the stable
    /// letter; amalgam-like: left gens then right gens.
    whole: SubgroupGraph,
    /// Folded vertex-group graphs: the (left) vertex group, and the
    /// right factor for amalgam shapes.
    left_graph: SubgroupGraph,
    right_graph: Option<SubgroupGraph>,
    /// Number of generators belonging to the (left) vertex group.
    left_count: usize,
    /// Edge element expressions over the factor alphabets (Z only):
    /// HNN: `a` and `b` over the vertex generators; amalgam: the edge
    /// element over the left and the right generators (right already
    /// shifted into the whole alphabet).
    repl_pos: Option<GenWord>,
    repl_neg: Option<GenWord>,
    edge_pos: Option<Word>,
    edge_neg: Option<Word>,
}

impl AdaptedSplitting {
    fn build(datum: SplittingDatum) -> AdaptedSplitting {
        let g = datum.rank;
        match &datum.kind {
            SplittingKind::Hnn { vertex_gens, stable, edge_a, edge_b } => {
                let vgraph = SubgroupGraph::fold(g, vertex_gens);
                let a_expr = vgraph.express(edge_a).expect("validated membership");
                let b_expr = vgraph.express(edge_b).expect("validated membership");
                let mut all = vertex_gens.clone();
                all.push(stable.clone());
                let whole = SubgroupGraph::fold(g, &all);
                AdaptedSplitting {
                    left_count: vertex_gens.len(),
                    whole,
                    left_graph: vgraph,
                    right_graph: None,
                    // a pinch t·a^k·t⁻¹ is replaced by b^k and vice versa
                    repl_pos: Some(b_expr),
                    repl_neg: Some(a_expr),
                    edge_pos: Some(edge_a.clone()),
                    edge_neg: Some(edge_b.clone()),
                    datum,
                }
            }
            SplittingKind::FreeHnn { vertex_gens, stable } => {
                let vgraph = SubgroupGraph::fold(g, vertex_gens);
                let mut all = vertex_gens.clone();
                all.push(stable.clone());
                let whole = SubgroupGraph::fold(g, &all);
                AdaptedSplitting {
                    left_count: vertex_gens.len(),
                    whole,
                    left_graph: vgraph,
                    right_graph: None,
                    repl_pos: None,
                    repl_neg: None,
                    edge_pos: None,
                    edge_neg: None,
                    datum,
                }
            }
            SplittingKind::Amalgam { left_gens, right_gens, edge } => {
                let lgraph = SubgroupGraph::fold(g, left_gens);
                let rgraph = SubgroupGraph::fold(g, right_gens);
                let left_expr = lgraph.express(edge).expect("validated membership");
                let shift = left_gens.len() as i32;
                let right_expr: GenWord = rgraph
                    .express(edge)
                    .expect("validated membership")
                    .iter()
                    .map(|&l| if l > 0 { l + shift } else { l - shift })
                    .collect();
                let mut all = left_gens.clone();
                all.extend(right_gens.iter().cloned());
                let whole = SubgroupGraph::fold(g, &all);
                AdaptedSplitting {
                    left_count: left_gens.len(),
                    whole,
                    left_graph: lgraph,
                    right_graph: Some(rgraph),
                    repl_pos: Some(left_expr),
                    repl_neg: Some(right_expr),
                    edge_pos: Some(edge.clone()),
                    edge_neg: Some(edge.clone()),
                    datum,
                }
            }
            SplittingKind::FreeAmalgam { left_gens, right_gens } => {
                let lgraph = SubgroupGraph::fold(g, left_gens);
                let rgraph = SubgroupGraph::fold(g, right_gens);
                let mut all = left_gens.clone();
                all.extend(right_gens.iter().cloned());
                let whole = SubgroupGraph::fold(g, &all);
                AdaptedSplitting {
                    left_count: left_gens.len(),
                    whole,
                    left_graph: lgraph,
                    right_graph: Some(rgraph),
                    repl_pos: None,
                    repl_neg: None,
                    edge_pos: None,
                    edge_neg: None,
                    datum,
                }
            }
        }
    }

    pub fn datum(&self) -> &SplittingDatum {
        &self.datum
    }

    pub fn rank(&self) -> u16 {
        self.datum.rank
    }

    pub fn orientation_sign(&self) -> i64 {
        self.datum.orientation.sign()
    }

    pub fn is_z(&self) -> bool {
        self.datum.is_z_splitting()
    }

    pub(crate) fn whole(&self) -> &SubgroupGraph {
        &self.whole
    }

    /// Folded graph of the (left) vertex group.
    pub(crate) fn factor_graph(&self, side: Side) -> &SubgroupGraph {
        match side {
            Side::Left => &self.left_graph,
            Side::Right => self.right_graph.as_ref().expect("amalgam shape"),
        }
    }

    pub(crate) fn has_two_factors(&self) -> bool {
        self.right_graph.is_some()
    }

    pub(crate) fn left_count(&self) -> usize {
        self.left_count
    }

    pub(crate) fn stable_word(&self) -> Option<&Word> {
        match &self.datum.kind {
            SplittingKind::Hnn { stable, .. } | SplittingKind::FreeHnn { stable, .. } => {
                Some(stable)
            }
            _ => None,
        }
    }

    /// The edge element conjugated by a positive stable crossing
    /// (HNN `a`; amalgam edge), if the edge group is nontrivial.
    pub(crate) fn edge_word(&self) -> Option<&Word> {
        self.edge_pos.as_ref()
    }

    pub(crate) fn edge_image_word(&self) -> Option<&Word> {
        self.edge_neg.as_ref()
    }

    /// Conjugacy class of the edge element; free splittings have none.
    pub fn core_class(&self) -> Option<ConjClass> {
        self.edge_pos.as_ref().map(ConjClass::new)
    }

    /// `value = edge^k` test appropriate to the sign of the preceding
    /// stable letter (HNN) or to a factor syllable (amalgam).
    fn pinch_power(&self, sign: i8, value: &Word) -> Option<i64> {
        match (&self.edge_pos, &self.edge_neg) {
            (None, _) | (_, None) => value.is_empty().then_some(0),
            (Some(a), Some(b)) => {
                if sign > 0 {
                    value.cyclic_member(a)
                } else {
                    value.cyclic_member(b)
                }
            }
        }
    }

    fn replacement(&self, sign: i8, k: i64) -> Syllable {
        let rank = self.datum.rank;
        let (expr, value) = if sign > 0 {
            (self.repl_pos.as_ref(), self.edge_neg.as_ref())
        } else {
            (self.repl_neg.as_ref(), self.edge_pos.as_ref())
        };
        match (expr, value) {
            (Some(e), Some(v)) => {
                let mut acc = Vec::new();
                let unit: GenWord = if k >= 0 {
                    e.clone()
                } else {
                    e.iter().rev().map(|&l| -l).collect()
                };
                for _ in 0..k.unsigned_abs() {
                    for &l in &unit {
                        crate::word::push_reduced(&mut acc, l);
                    }
                }
                Syllable { expr: acc, value: v.pow(k) }
            }
            _ => Syllable::empty(rank),
        }
    }

    fn syllable(&self, expr: GenWord) -> Syllable {
        let value = self.whole.substitute(&expr);
        Syllable { expr, value }
    }

    /// Pinch-free normal form of `w`.
    pub fn normal_form(&self, w: &Word) -> NormalForm {
        let hw = self
            .whole
            .express(w)
            .expect("adapted splitting generates the whole group");
        if self.datum.is_hnn_shape() {
            self.britton_form(&hw)
        } else {
            self.alternating_form(&hw)
        }
    }

    fn britton_form(&self, hw: &[i32]) -> NormalForm {
        let stable_h = (self.left_count + 1) as i32;
        let mut head: GenWord = Vec::new();
        let mut steps: Vec<(i8, GenWord)> = Vec::new();
        for &h in hw {
            if h.abs() == stable_h {
                steps.push((h.signum() as i8, Vec::new()));
            } else if let Some(last) = steps.last_mut() {
                crate::word::push_reduced(&mut last.1, h);
            } else {
                crate::word::push_reduced(&mut head, h);
            }
        }
        let mut head = self.syllable(head);
        let mut steps: Vec<(i8, Syllable)> =
            steps.into_iter().map(|(s, e)| (s, self.syllable(e))).collect();
        // Britton reduction: remove pinches t^s·edge^k·t^{-s}
        let mut i = 0;
        while i + 1 < steps.len() {
            let (s, next_s) = (steps[i].0, steps[i + 1].0);
            if next_s == -s {
                if let Some(k) = self.pinch_power(s, &steps[i].1.value) {
                    let repl = self.replacement(s, k);
                    let tail = steps[i + 1].1.clone();
                    steps.drain(i..=i + 1);
                    if i == 0 {
                        head = Syllable::concat(&[&head, &repl, &tail], self.datum.rank);
                    } else {
                        let merged =
                            Syllable::concat(&[&steps[i - 1].1, &repl, &tail], self.datum.rank);
                        steps[i - 1].1 = merged;
                    }
                    i = i.saturating_sub(1);
                    continue;
                }
            }
            i += 1;
        }
        NormalForm::Britton { head, steps }
    }

    fn alternating_form(&self, hw: &[i32]) -> NormalForm {
        let side_of = |h: i32| {
            if (h.unsigned_abs() as usize) <= self.left_count {
                Side::Left
            } else {
                Side::Right
            }
        };
        let mut syllables: Vec<(Side, GenWord)> = Vec::new();
        for &h in hw {
            let side = side_of(h);
            match syllables.last_mut() {
                Some((s, e)) if *s == side => crate::word::push_reduced(e, h),
                _ => syllables.push((side, vec![h])),
            }
        }
        let mut syls: Vec<(Side, Syllable)> = syllables
            .into_iter()
            .map(|(s, e)| (s, self.syllable(e)))
            .collect();
        loop {
            let mut changed = false;
            // merge adjacent same-side syllables
            let mut i = 0;
            while i + 1 < syls.len() {
                if syls[i].0 == syls[i + 1].0 {
                    let merged =
                        Syllable::concat(&[&syls[i].1, &syls[i + 1].1], self.datum.rank);
                    syls[i].1 = merged;
                    syls.remove(i + 1);
                    changed = true;
                } else {
                    i += 1;
                }
            }
            // drop trivial syllables
            if syls.len() > 1 {
                if let Some(i) = syls.iter().position(|(_, s)| s.value.is_empty()) {
                    syls.remove(i);
                    changed = true;
                }
            }
            // an edge-group syllable belongs to both factors: flip its
            // side so the same-side merge absorbs it
            if !changed && syls.len() > 1 {
                for i in 0..syls.len() {
                    let (side, syl) = &syls[i];
                    if let Some(k) = self.pinch_power(1, &syl.value) {
                        let flipped = side.other();
                        let sign: i8 = if flipped == Side::Left { 1 } else { -1 };
                        // left replacement expr encodes edge over left
                        // gens, right over right gens
                        let re = self.replacement(-sign, k);
                        syls[i] = (flipped, re);
                        changed = true;
                        break;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        NormalForm::Alternating { syllables: syls }
    }

    /// Reassemble the ambient word from a normal form.
    pub fn substitute(&self, nf: &NormalForm) -> Word {
        let rank = self.datum.rank;
        match nf {
            NormalForm::Britton { head, steps } => {
                let stable = self.stable_word().expect("HNN shape");
                let mut acc = head.value.clone();
                for (s, v) in steps {
                    let t = if *s > 0 { stable.clone() } else { stable.inverse() };
                    acc = Word::product(rank, [&acc, &t, &v.value]);
                }
                acc
            }
            NormalForm::Alternating { syllables } => {
                Word::product(rank, syllables.iter().map(|(_, s)| &s.value))
            }
        }
    }

    /// Translation length of `w` on the dual tree — the intersection
    /// number of the conjugacy class of `w` with this splitting.
    pub fn translation_length(&self, w: &Word) -> u64 {
        assert!(!w.is_empty(), "translation length needs a nontrivial word");
        match self.normal_form(w) {
            NormalForm::Britton { head, mut steps } => {
                if steps.is_empty() {
                    return 0;
                }
                // pass to the cyclic word: conjugate the head away
                let last = steps.len() - 1;
                steps[last].1.value = steps[last].1.value.mul(&head.value);
                loop {
                    let m = steps.len();
                    if m == 0 {
                        return 0;
                    }
                    if m == 1 {
                        return 1;
                    }
                    let s_last = steps[m - 1].0;
                    let s_first = steps[0].0;
                    if s_first == -s_last {
                        if let Some(k) = self.pinch_power(s_last, &steps[m - 1].1.value) {
                            if m == 2 {
                                return 0;
                            }
                            let u = self.replacement(s_last, k).value;
                            let v1 = steps[0].1.value.clone();
                            steps.remove(m - 1);
                            steps.remove(0);
                            let last = steps.len() - 1;
                            steps[last].1.value =
                                Word::product(self.datum.rank, [&steps[last].1.value, &u, &v1]);
                            continue;
                        }
                    }
                    return m as u64;
                }
            }
            NormalForm::Alternating { syllables } => {
                let mut seq: Vec<(Side, Word)> = syllables
                    .into_iter()
                    .map(|(side, s)| (side, s.value))
                    .collect();
                loop {
                    if seq.len() <= 1 {
                        return 0;
                    }
                    let front_side = seq[0].0;
                    let back_side = seq[seq.len() - 1].0;
                    if front_side != back_side {
                        debug_assert!(seq.len() % 2 == 0);
                        return seq.len() as u64;
                    }
                    // conjugate the back syllable around the wrap
                    let back = seq.pop().expect("nonempty");
                    let merged = back.1.mul(&seq[0].1);
                    seq[0].1 = merged;
                    // absorb an edge-group (or trivial) front syllable
                    if self.pinch_power(1, &seq[0].1).is_some() {
                        if seq.len() == 1 {
                            return 0;
                        }
                        let front = seq.remove(0);
                        seq[0].1 = front.1.mul(&seq[0].1);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::word::{enumerate_ball, Alphabet};

    fn wd(s: &str) -> Word {
        Word::parse(s, &Alphabet::new("xyz").unwrap()).unwrap()
    }

    fn w2(s: &str) -> Word {
        Word::parse(s, &Alphabet::new("xy").unwrap()).unwrap()
    }

    #[test]
    fn t1_validates() {
        let report = fixtures::t1().validate();
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn euler_violation_detected() {
        // V = ⟨x⟩ with stable y in rank 2: rank V = 1 ≠ 2
        let d = SplittingDatum {
            rank: 2,
            kind: SplittingKind::Hnn {
                vertex_gens: vec![w2("x")],
                stable: w2("y"),
                edge_a: w2("x"),
                edge_b: w2("x"),
            },
            orientation: Orientation::Positive,
        };
        let report = d.validate();
        assert!(!report.is_valid());
        assert!(report
            .failures()
            .any(|c| c.name == "euler_characteristic"));
    }

    #[test]
    fn free_hnn_validates() {
        let d = SplittingDatum {
            rank: 2,
            kind: SplittingKind::FreeHnn { vertex_gens: vec![w2("x")], stable: w2("y") },
            orientation: Orientation::Positive,
        };
        assert!(d.validate().is_valid());
    }

    #[test]
    fn relation_violation_detected() {
        let d = SplittingDatum {
            rank: 2,
            kind: SplittingKind::Hnn {
                vertex_gens: vec![w2("x"), w2("yxY")],
                stable: w2("y"),
                edge_a: w2("x"),
                edge_b: w2("x"),
            },
            orientation: Orientation::Positive,
        };
        let report = d.validate();
        assert!(report.failures().any(|c| c.name == "relation_holds"));
    }

    #[test]
    fn normal_form_examples_t1() {
        let t1 = fixtures::t1().adapt().unwrap();
        // w = y: a single stable letter
        let nf = t1.normal_form(&w2("y"));
        match &nf {
            NormalForm::Britton { head, steps } => {
                assert!(head.value.is_empty());
                assert_eq!(steps.len(), 1);
                assert_eq!(steps[0].0, 1);
                assert!(steps[0].1.value.is_empty());
            }
            _ => panic!("expected Britton form"),
        }
        assert_eq!(t1.substitute(&nf), w2("y"));
        // w = x: a single vertex syllable
        let nf = t1.normal_form(&w2("x"));
        match &nf {
            NormalForm::Britton { head, steps } => {
                assert_eq!(head.value, w2("x"));
                assert!(steps.is_empty());
            }
            _ => panic!(),
        }
        // w = yxY: the pinch t·a·t⁻¹ collapses to the vertex element b
        let nf = t1.normal_form(&w2("yxY"));
        match &nf {
            NormalForm::Britton { head, steps } => {
                assert!(steps.is_empty());
                assert_eq!(head.value, w2("yxY"));
            }
            _ => panic!(),
        }
        assert_eq!(t1.substitute(&nf), w2("yxY"));
    }

    #[test]
    fn normal_form_roundtrip_random() {
        let t1 = fixtures::t1().adapt().unwrap();
        let t2 = fixtures::t2().adapt().unwrap();
        let s2 = fixtures::s2().adapt().unwrap();
        for w in enumerate_ball(2, 5).iter().step_by(7) {
            for s in [&t1, &t2, &s2] {
                let nf = s.normal_form(w);
                assert_eq!(s.substitute(&nf), *w, "roundtrip for {w:?}");
            }
        }
    }

    #[test]
    fn translation_length_examples() {
        let t1 = fixtures::t1().adapt().unwrap();
        assert_eq!(t1.translation_length(&w2("x")), 0);
        assert_eq!(t1.translation_length(&w2("y")), 1);
        assert_eq!(t1.translation_length(&w2("xy")), 1);
        // free splitting dual to x: V = ⟨y⟩, stable x; w = yxx → 2
        let s = SplittingDatum {
            rank: 2,
            kind: SplittingKind::FreeHnn { vertex_gens: vec![w2("y")], stable: w2("x") },
            orientation: Orientation::Positive,
        }
        .adapt()
        .unwrap();
        assert_eq!(s.translation_length(&w2("yxx")), 2);
    }

    #[test]
    fn translation_length_free_splitting_counts_letters() {
        // exhaustive check in rank 2 up to length 8
        let s = SplittingDatum {
            rank: 2,
            kind: SplittingKind::FreeHnn { vertex_gens: vec![w2("y")], stable: w2("x") },
            orientation: Orientation::Positive,
        }
        .adapt()
        .unwrap();
        for w in enumerate_ball(2, 8) {
            if w.is_empty() {
                continue;
            }
            let (core, _) = w.cyclic_reduce();
            let expected = core.letters().iter().filter(|l| l.abs() == 1).count() as u64;
            assert_eq!(s.translation_length(&w), expected, "word {w:?}");
        }
    }

    #[test]
    fn translation_length_is_conjugacy_invariant() {
        let t1 = fixtures::t1().adapt().unwrap();
        let t2 = fixtures::t2().adapt().unwrap();
        let s2 = fixtures::s2().adapt().unwrap();
        let ball = enumerate_ball(2, 4);
        for w in ball.iter().step_by(11) {
            if w.is_empty() {
                continue;
            }
            for c in ball.iter().step_by(13) {
                let conj = w.conjugated(c);
                if conj.is_empty() {
                    continue;
                }
                for s in [&t1, &t2, &s2] {
                    assert_eq!(
                        s.translation_length(w),
                        s.translation_length(&conj),
                        "w={w:?} c={c:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn translation_length_is_homogeneous() {
        let t1 = fixtures::t1().adapt().unwrap();
        let t2 = fixtures::t2().adapt().unwrap();
        for w in enumerate_ball(2, 3).iter().step_by(5) {
            if w.is_empty() {
                continue;
            }
            for s in [&t1, &t2] {
                let base = s.translation_length(w);
                for n in 1..=5i64 {
                    assert_eq!(s.translation_length(&w.pow(n)), base * n as u64);
                    assert_eq!(s.translation_length(&w.pow(-n)), base * n as u64);
                }
            }
        }
    }

    #[test]
    fn core_examples() {
        let t1 = fixtures::t1().adapt().unwrap();
        assert_eq!(t1.core_class().unwrap(), ConjClass::new(&w2("x")));
        let s2 = fixtures::s2().adapt().unwrap();
        assert_eq!(s2.core_class().unwrap(), ConjClass::new(&w2("xx")));
        let free = SplittingDatum {
            rank: 2,
            kind: SplittingKind::FreeHnn { vertex_gens: vec![w2("y")], stable: w2("x") },
            orientation: Orientation::Positive,
        }
        .adapt()
        .unwrap();
        assert!(free.core_class().is_none());
    }

    #[test]
    fn amalgam_translation_lengths() {
        let s2 = fixtures::s2().adapt().unwrap();
        // x and y are elliptic, x² is the core
        assert_eq!(s2.translation_length(&w2("x")), 0);
        assert_eq!(s2.translation_length(&w2("y")), 0);
        assert_eq!(s2.translation_length(&w2("xx")), 0);
        // xy is hyperbolic: alternating core (x)(y) crosses two edges
        assert_eq!(s2.translation_length(&w2("xy")), 2);
        assert_eq!(s2.translation_length(&w2("xyxy")), 4);
    }

    #[test]
    fn f3_fixtures_validate() {
        for d in [fixtures::f3_ta(), fixtures::f3_tb(), fixtures::f3_tc(), fixtures::f3_s3()] {
            let report = d.validate();
            assert!(report.is_valid(), "{report}");
        }
        let ta = fixtures::f3_ta().adapt().unwrap();
        assert_eq!(ta.translation_length(&wd("y")), 1);
        assert_eq!(ta.translation_length(&wd("x")), 0);
        assert_eq!(ta.translation_length(&wd("z")), 0);
    }
}
