//! Library-provided splitting data used by the test suite and shipped
//! as JSON bundles with the command line tool.  All constructors emit
//! data that passes every adaptedness check by construction.

use alloc::vec;

use crate::splitting::{Orientation, SplittingDatum, SplittingKind};
use crate::word::Word;

fn w(rank: u16, letters: &[i32]) -> Word {
    Word::from_letters(rank, letters.iter().copied()).expect("fixture letters")
}

/// Rank-2 HNN splitting with core `x`: vertex group `⟨x, yxy⁻¹⟩`,
/// stable letter `y`.  Its twist sends `y ↦ yx`.
pub fn t1() -> SplittingDatum {
    SplittingDatum {
        rank: 2,
        kind: SplittingKind::Hnn {
            vertex_gens: vec![w(2, &[1]), w(2, &[2, 1, -2])],
            stable: w(2, &[2]),
            edge_a: w(2, &[1]),
            edge_b: w(2, &[2, 1, -2]),
        },
        orientation: Orientation::Positive,
    }
}

/// Rank-2 HNN splitting with core `xy`: vertex group `⟨xy, yx⟩`,
/// stable letter `y`.  Its twist sends `y ↦ yxy`.
pub fn t2() -> SplittingDatum {
    SplittingDatum {
        rank: 2,
        kind: SplittingKind::Hnn {
            vertex_gens: vec![w(2, &[1, 2]), w(2, &[2, 1])],
            stable: w(2, &[2]),
            edge_a: w(2, &[1, 2]),
            edge_b: w(2, &[2, 1]),
        },
        orientation: Orientation::Positive,
    }
}

/// Rank-2 amalgam with core `x²`: `⟨x⟩ ∗ ⟨x², y⟩` over `⟨x²⟩`.
/// Its twist sends `y ↦ x²yx⁻²`; it commutes with the `t1` twist.
pub fn s2() -> SplittingDatum {
    SplittingDatum {
        rank: 2,
        kind: SplittingKind::Amalgam {
            left_gens: vec![w(2, &[1])],
            right_gens: vec![w(2, &[1, 1]), w(2, &[2])],
            edge: w(2, &[1, 1]),
        },
        orientation: Orientation::Positive,
    }
}

/// Rank-3 HNN splitting with core `x`, twisting `y ↦ yx`.
pub fn f3_ta() -> SplittingDatum {
    SplittingDatum {
        rank: 3,
        kind: SplittingKind::Hnn {
            vertex_gens: vec![w(3, &[1]), w(3, &[2, 1, -2]), w(3, &[3])],
            stable: w(3, &[2]),
            edge_a: w(3, &[1]),
            edge_b: w(3, &[2, 1, -2]),
        },
        orientation: Orientation::Positive,
    }
}

/// Rank-3 HNN splitting with core `x`, twisting `z ↦ zx`.  Its core
/// coincides with `f3_ta`'s, so the pair commutes but is rejected by
/// the compatibility check.
pub fn f3_tb() -> SplittingDatum {
    SplittingDatum {
        rank: 3,
        kind: SplittingKind::Hnn {
            vertex_gens: vec![w(3, &[1]), w(3, &[3, 1, -3]), w(3, &[2])],
            stable: w(3, &[3]),
            edge_a: w(3, &[1]),
            edge_b: w(3, &[3, 1, -3]),
        },
        orientation: Orientation::Positive,
    }
}

/// Rank-3 HNN splitting with core `xy`, twisting `y ↦ yxy`.  It
/// crosses `f3_ta`.
pub fn f3_tc() -> SplittingDatum {
    SplittingDatum {
        rank: 3,
        kind: SplittingKind::Hnn {
            vertex_gens: vec![w(3, &[1, 2]), w(3, &[2, 1]), w(3, &[3])],
            stable: w(3, &[2]),
            edge_a: w(3, &[1, 2]),
            edge_b: w(3, &[2, 1]),
        },
        orientation: Orientation::Positive,
    }
}

/// Rank-3 amalgam with core `x²`: `⟨x⟩ ∗ ⟨x², y, z⟩` over `⟨x²⟩`.
/// Its twist conjugates `y` and `z` by `x²`; it commutes with `f3_ta`
/// and their cores are distinct, so the pair is a compatible
/// collection with a complete coincidence graph.
pub fn f3_s3() -> SplittingDatum {
    SplittingDatum {
        rank: 3,
        kind: SplittingKind::Amalgam {
            left_gens: vec![w(3, &[1])],
            right_gens: vec![w(3, &[1, 1]), w(3, &[2]), w(3, &[3])],
            edge: w(3, &[1, 1]),
        },
        orientation: Orientation::Positive,
    }
}

/// The named rank-2 fixtures in bundle order.
pub fn rank2_fixtures() -> vec::Vec<(&'static str, SplittingDatum)> {
    vec![("T1", t1()), ("T2", t2()), ("S2", s2())]
}

/// The named rank-3 fixtures in bundle order.
pub fn rank3_fixtures() -> vec::Vec<(&'static str, SplittingDatum)> {
    vec![("Ta", f3_ta()), ("Tb", f3_tb()), ("Tc", f3_tc()), ("S3", f3_s3())]
}
