//! Automorphisms of the free group as generator-image tables, with
//! explicit inverses.
//!
//! A Dehn twist along an oriented one-edge splitting acts by the
//! identity on the vertex group and multiplies the stable letter by the
//! edge element (HNN), or fixes one factor and conjugates the other by
//! the edge element (amalgam).  Composition and powers keep the image
//! tables eagerly reduced; word growth under composition is the main
//! cost of the scanning pipeline, so `apply` works letter by letter
//! with cancellation into a single output buffer.

use alloc::vec::Vec;
use core::fmt;

use crate::splitting::{AdaptedSplitting, SplittingKind};
use crate::word::{push_reduced, Letter, Word};

/// Image length limit was exceeded while composing or applying maps.
/// This signals resource exhaustion, not a mathematical failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthError {
    pub limit: usize,
}

impl fmt::Display for GrowthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "word length limit {} exceeded", self.limit)
    }
}

impl core::error::Error for GrowthError {}

/// Errors from assembling an automorphism out of raw image tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismError {
    RankMismatch,
    TableSize,
    NotInverse,
}

impl fmt::Display for AutomorphismError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomorphismError::RankMismatch => write!(f, "image rank mismatch"),
            AutomorphismError::TableSize => write!(f, "need one image per basis element"),
            AutomorphismError::NotInverse => {
                write!(f, "backward table is not inverse to the forward table")
            }
        }
    }
}

impl core::error::Error for AutomorphismError {}

/// An automorphism of the free group, stored as forward and backward
/// generator images.  Equality is equality of the forward table, i.e.
/// equality in `Aut(F)`, not in `Out(F)`; see [`Automorphism::outer_equal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    rank: u16,
    forward: Vec<Word>,
    backward: Vec<Word>,
}

fn apply_table(rank: u16, table: &[Word], w: &Word, limit: usize) -> Result<Word, GrowthError> {
    let mut buf: Vec<Letter> = Vec::new();
    for &l in w.letters() {
        let img = &table[(l.unsigned_abs() - 1) as usize];
        if l > 0 {
            for &a in img.letters() {
                push_reduced(&mut buf, a);
            }
        } else {
            for &a in img.letters().iter().rev() {
                push_reduced(&mut buf, -a);
            }
        }
        if buf.len() > limit {
            return Err(GrowthError { limit });
        }
    }
    Ok(Word::from_letters(rank, buf).expect("images are valid words"))
}

impl Automorphism {
    pub fn identity(rank: u16) -> Automorphism {
        let table: Vec<Word> = (1..=rank).map(|i| Word::generator(rank, i)).collect();
        Automorphism { rank, forward: table.clone(), backward: table }
    }

    /// Assemble from explicit tables, verifying the inverse relation.
    pub fn from_images(
        rank: u16,
        forward: Vec<Word>,
        backward: Vec<Word>,
    ) -> Result<Automorphism, AutomorphismError> {
        if forward.len() != rank as usize || backward.len() != rank as usize {
            return Err(AutomorphismError::TableSize);
        }
        if forward.iter().chain(&backward).any(|w| w.rank() != rank) {
            return Err(AutomorphismError::RankMismatch);
        }
        let a = Automorphism { rank, forward, backward };
        for i in 1..=rank {
            let x = Word::generator(rank, i);
            if a.apply_inverse(&a.apply(&x)) != x || a.apply(&a.apply_inverse(&x)) != x {
                return Err(AutomorphismError::NotInverse);
            }
        }
        Ok(a)
    }

    /// The Dehn twist of an oriented Z-splitting.  `None` for free
    /// splittings, which have no twist.
    pub fn from_splitting(s: &AdaptedSplitting) -> Option<Automorphism> {
        if !s.is_z() {
            return None;
        }
        let rank = s.rank();
        let sign = s.orientation_sign();
        let table_for = |sign: i64| -> Vec<Word> {
            // images of the splitting's own generators
            let gen_images: Vec<Word> = match &s.datum().kind {
                SplittingKind::Hnn { vertex_gens, stable, edge_a, .. } => {
                    let mut imgs = vertex_gens.clone();
                    imgs.push(stable.mul(&edge_a.pow(sign)));
                    imgs
                }
                SplittingKind::Amalgam { left_gens, right_gens, edge } => {
                    let c = edge.pow(sign);
                    let mut imgs = left_gens.clone();
                    imgs.extend(right_gens.iter().map(|g| g.conjugated(&c)));
                    imgs
                }
                _ => unreachable!("free splittings filtered above"),
            };
            (1..=rank)
                .map(|i| {
                    let expr = s
                        .whole()
                        .express(&Word::generator(rank, i))
                        .expect("adapted splitting generates the whole group");
                    crate::subgroup::substitute(rank, &gen_images, &expr)
                })
                .collect()
        };
        let auto = Automorphism {
            rank,
            forward: table_for(sign),
            backward: table_for(-sign),
        };
        debug_assert!(auto.check_inverse_tables());
        Some(auto)
    }

    /// Conjugation by `w`: the inner automorphism `v ↦ w·v·w⁻¹`.
    pub fn inner(w: &Word) -> Automorphism {
        let rank = w.rank();
        let forward = (1..=rank)
            .map(|i| Word::generator(rank, i).conjugated(w))
            .collect();
        let inv = w.inverse();
        let backward = (1..=rank)
            .map(|i| Word::generator(rank, i).conjugated(&inv))
            .collect();
        Automorphism { rank, forward, backward }
    }

    /// Elementary Nielsen map `xᵢ ↦ xᵢ·xⱼ` (others fixed).
    pub fn nielsen_right_multiplier(rank: u16, i: u16, j: u16) -> Automorphism {
        assert!(i != j && i >= 1 && j >= 1 && i <= rank && j <= rank);
        let mut forward = Automorphism::identity(rank).forward;
        let mut backward = forward.clone();
        forward[(i - 1) as usize] =
            Word::generator(rank, i).mul(&Word::generator(rank, j));
        backward[(i - 1) as usize] =
            Word::generator(rank, i).mul(&Word::generator(rank, j).inverse());
        Automorphism { rank, forward, backward }
    }

    /// Elementary Nielsen map `xᵢ ↦ xᵢ⁻¹`.
    pub fn nielsen_inverter(rank: u16, i: u16) -> Automorphism {
        let mut forward = Automorphism::identity(rank).forward;
        forward[(i - 1) as usize] = Word::generator(rank, i).inverse();
        Automorphism { rank, backward: forward.clone(), forward }
    }

    /// Basis transposition `xᵢ ↔ xⱼ`.
    pub fn nielsen_swap(rank: u16, i: u16, j: u16) -> Automorphism {
        let mut forward = Automorphism::identity(rank).forward;
        forward.swap((i - 1) as usize, (j - 1) as usize);
        Automorphism { rank, backward: forward.clone(), forward }
    }

    fn check_inverse_tables(&self) -> bool {
        (1..=self.rank).all(|i| {
            let x = Word::generator(self.rank, i);
            self.apply_inverse(&self.apply(&x)) == x && self.apply(&self.apply_inverse(&x)) == x
        })
    }

    pub fn rank(&self) -> u16 {
        self.rank
    }

    pub fn forward_images(&self) -> &[Word] {
        &self.forward
    }

    pub fn backward_images(&self) -> &[Word] {
        &self.backward
    }

    pub fn max_image_len(&self) -> usize {
        self.forward.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        self.forward
            .iter()
            .enumerate()
            .all(|(i, w)| *w == Word::generator(self.rank, i as u16 + 1))
    }

    pub fn apply(&self, w: &Word) -> Word {
        apply_table(self.rank, &self.forward, w, usize::MAX).expect("unlimited")
    }

    pub fn apply_inverse(&self, w: &Word) -> Word {
        apply_table(self.rank, &self.backward, w, usize::MAX).expect("unlimited")
    }

    pub fn apply_checked(&self, w: &Word, limit: usize) -> Result<Word, GrowthError> {
        apply_table(self.rank, &self.forward, w, limit)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        self.compose_checked(other, usize::MAX).expect("unlimited")
    }

    pub fn compose_checked(
        &self,
        other: &Automorphism,
        limit: usize,
    ) -> Result<Automorphism, GrowthError> {
        assert_eq!(self.rank, other.rank, "rank mismatch in composition");
        let forward = other
            .forward
            .iter()
            .map(|w| apply_table(self.rank, &self.forward, w, limit))
            .collect::<Result<Vec<_>, _>>()?;
        // (φ∘ψ)⁻¹ = ψ⁻¹∘φ⁻¹
        let backward = self
            .backward
            .iter()
            .map(|w| apply_table(self.rank, &other.backward, w, limit))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Automorphism { rank: self.rank, forward, backward })
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            rank: self.rank,
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }

    /// Integer power by repeated squaring on the image tables.
    pub fn power(&self, n: i64) -> Automorphism {
        self.power_checked(n, usize::MAX).expect("unlimited")
    }

    pub fn power_checked(&self, n: i64, limit: usize) -> Result<Automorphism, GrowthError> {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Automorphism::identity(self.rank);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_checked(&base, limit)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.compose_checked(&base, limit)?;
            }
        }
        Ok(acc)
    }

    /// Decide whether the map is an inner automorphism and return the
    /// conjugator.  Any witness must have the form `c·x₁^k` where `c`
    /// conjugates `x₁` to its image, because the centralizer of a basis
    /// element is the cyclic group it generates.  The exponent `k` is
    /// read off the reduced image of another basis element, which keeps
    /// it within the conservative bound of twice the longest image.
    pub fn is_inner(&self) -> Option<Word> {
        let x1 = Word::generator(self.rank, 1);
        let c = x1.is_conjugate(&self.forward[0])?;
        let c_inv = c.inverse();
        let mut k: Option<i64> = None;
        for i in 2..=self.rank {
            // c⁻¹·φ(xᵢ)·c must equal x₁^k · xᵢ · x₁^{−k} literally
            let img = self.forward[(i - 1) as usize].conjugated(&c_inv);
            let ki = parse_axis_conjugate(&img, i)?;
            match k {
                None => k = Some(ki),
                Some(k0) if k0 == ki => {}
                _ => return None,
            }
        }
        let u = c.mul(&x1.pow(k.unwrap_or(0)));
        for i in 1..=self.rank {
            let xi = Word::generator(self.rank, i);
            if xi.conjugated(&u) != self.forward[(i - 1) as usize] {
                return None;
            }
        }
        Some(u)
    }

    /// Equality in the outer automorphism group.
    pub fn outer_equal(&self, other: &Automorphism) -> bool {
        other.inverse().compose(self).is_inner().is_some()
    }

    /// Whether the commutator `[self, other]` is trivial in `Out(F)`.
    /// By the commuting criterion this decides whether the underlying
    /// splittings admit disjoint representatives.
    pub fn commutator_is_inner(&self, other: &Automorphism) -> bool {
        self.compose(other).outer_equal(&other.compose(self))
    }
}

/// Parse `w == x₁^k · x_target · x₁^{−k}` and return `k`.
fn parse_axis_conjugate(w: &Word, target: u16) -> Option<i64> {
    let ls = w.letters();
    if ls.len() % 2 == 0 {
        return None;
    }
    let h = ls.len() / 2;
    if ls[h] != target as Letter {
        return None;
    }
    if h == 0 {
        return Some(0);
    }
    let lead = ls[0];
    if lead.unsigned_abs() != 1 {
        return None;
    }
    for j in 0..h {
        if ls[j] != lead || ls[ls.len() - 1 - j] != -lead {
            return None;
        }
    }
    Some(if lead > 0 { h as i64 } else { -(h as i64) })
}
