//! Freely reduced words over a rank-`g` alphabet.
//!
//! Letters are signed generator indices: `+i` is the `i`-th generator
//! (1-based), `-i` its inverse.  Every [`Word`] is freely reduced at
//! all times, so equality of words is equality in the free group.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Signed generator index. `0` is never a valid letter.
pub type Letter = i32;

/// Errors raised while building or parsing words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    /// A letter's generator index falls outside `1..=rank`.
    LetterOutOfRange { letter: Letter, rank: u16 },
    /// A character of a serialized word is not in the alphabet.
    Parse { position: usize, ch: char },
    /// Alphabet construction rejected the letter set.
    BadAlphabet(&'static str),
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::LetterOutOfRange { letter, rank } => {
                write!(f, "letter {letter} out of range for rank {rank}")
            }
            WordError::Parse { position, ch } => {
                write!(f, "unexpected character {ch:?} at position {position}")
            }
            WordError::BadAlphabet(msg) => write!(f, "bad alphabet: {msg}"),
        }
    }
}

impl core::error::Error for WordError {}

/// Display alphabet for words: lowercase letters in generator order,
/// uppercase means inverse.  `Alphabet::latin(2)` is `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    /// The first `rank` lowercase latin letters.
    pub fn latin(rank: u16) -> Alphabet {
        assert!(rank <= 26, "latin alphabet supports rank <= 26");
        Alphabet {
            chars: (0..rank).map(|i| (b'a' + i as u8) as char).collect(),
        }
    }

    /// Custom generator letters, e.g. `"xyz"` for rank 3.
    pub fn new(letters: &str) -> Result<Alphabet, WordError> {
        let chars: Vec<char> = letters.chars().collect();
        if chars.is_empty() || chars.len() > 26 {
            return Err(WordError::BadAlphabet("need between 1 and 26 letters"));
        }
        for &c in &chars {
            if !c.is_ascii_lowercase() {
                return Err(WordError::BadAlphabet("letters must be ascii lowercase"));
            }
        }
        for (i, &c) in chars.iter().enumerate() {
            if chars[..i].contains(&c) {
                return Err(WordError::BadAlphabet("letters must be distinct"));
            }
        }
        Ok(Alphabet { chars })
    }

    pub fn rank(&self) -> u16 {
        self.chars.len() as u16
    }

    fn letter_of(&self, ch: char) -> Option<Letter> {
        let lower = ch.to_ascii_lowercase();
        let idx = self.chars.iter().position(|&c| c == lower)? as Letter + 1;
        Some(if ch.is_ascii_uppercase() { -idx } else { idx })
    }

    fn char_of(&self, l: Letter) -> char {
        let c = self.chars[(l.unsigned_abs() - 1) as usize];
        if l < 0 {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

/// Push a letter onto a reduced buffer, cancelling an inverse pair.
#[inline]
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    debug_assert!(l != 0);
    if buf.last() == Some(&-l) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

/// A freely reduced word in the free group of rank `rank`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: u16,
    letters: Vec<Letter>,
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(r{}, {})", self.rank, self.display(&Alphabet::latin(self.rank.min(26))))
    }
}

impl Word {
    pub fn identity(rank: u16) -> Word {
        Word { rank, letters: Vec::new() }
    }

    /// The `index`-th basis element (1-based).
    pub fn generator(rank: u16, index: u16) -> Word {
        assert!(index >= 1 && index <= rank);
        Word { rank, letters: vec![index as Letter] }
    }

    /// Freely reduce a raw letter sequence. This is the only public
    /// constructor from letters; the result is always reduced.
    pub fn from_letters<I>(rank: u16, letters: I) -> Result<Word, WordError>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut buf = Vec::new();
        for l in letters {
            if l == 0 || l.unsigned_abs() > rank as u32 {
                return Err(WordError::LetterOutOfRange { letter: l, rank });
            }
            push_reduced(&mut buf, l);
        }
        Ok(Word { rank, letters: buf })
    }

    pub(crate) fn from_reduced(rank: u16, letters: Vec<Letter>) -> Word {
        debug_assert!(letters.windows(2).all(|p| p[0] != -p[1]));
        debug_assert!(letters.iter().all(|&l| l != 0 && l.unsigned_abs() <= rank as u32));
        Word { rank, letters }
    }

    pub fn rank(&self) -> u16 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        assert_eq!(self.rank, other.rank, "rank mismatch in word multiplication");
        let mut buf = Vec::with_capacity(self.len() + other.len());
        buf.extend_from_slice(&self.letters);
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        Word { rank: self.rank, letters: buf }
    }

    /// Product of several factors, reducing once.
    pub fn product<'a, I>(rank: u16, parts: I) -> Word
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut buf = Vec::new();
        for w in parts {
            assert_eq!(w.rank, rank, "rank mismatch in word product");
            for &l in &w.letters {
                push_reduced(&mut buf, l);
            }
        }
        Word { rank, letters: buf }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut buf = Vec::new();
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut buf, l);
            }
        }
        Word { rank: self.rank, letters: buf }
    }

    /// `by · self · by⁻¹`, reduced.
    pub fn conjugated(&self, by: &Word) -> Word {
        Word::product(self.rank, [by, self, &by.inverse()])
    }

    /// Strip matching first/last letters: returns `(core, conjugator)`
    /// with `self = conjugator · core · conjugator⁻¹` and the core
    /// cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == -self.letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        let core = Word::from_reduced(self.rank, self.letters[lo..hi].to_vec());
        let conj = Word::from_reduced(self.rank, self.letters[..lo].to_vec());
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() < 2 || self.letters[0] != -self.letters[self.len() - 1]
    }

    /// Conjugacy test with witness: returns `c` with `c·self·c⁻¹ = other`.
    pub fn is_conjugate(&self, other: &Word) -> Option<Word> {
        assert_eq!(self.rank, other.rank);
        let (cu, ju) = self.cyclic_reduce();
        let (cv, jv) = other.cyclic_reduce();
        if cu.len() != cv.len() {
            return None;
        }
        if cu.is_empty() {
            return Some(Word::identity(self.rank));
        }
        let n = cu.len();
        let ru = least_rotation_start(cu.letters());
        let rv = least_rotation_start(cv.letters());
        if rotate(cu.letters(), ru) != rotate(cv.letters(), rv) {
            return None;
        }
        // rotate_left(cu, k) == cv with k = ru - rv (mod n); the prefix
        // p = cu[..k] satisfies cv = p⁻¹·cu·p, hence c = jv·p⁻¹·ju⁻¹.
        let k = (ru + n - rv) % n;
        let p = Word::from_reduced(self.rank, cu.letters()[..k].to_vec());
        let c = Word::product(self.rank, [&jv, &p.inverse(), &ju.inverse()]);
        debug_assert_eq!(self.conjugated(&c), *other);
        Some(c)
    }

    /// Conjugacy of unoriented loops: `self ~ other` or `self ~ other⁻¹`.
    pub fn is_conjugate_unoriented(&self, other: &Word) -> bool {
        self.is_conjugate(other).is_some() || self.is_conjugate(&other.inverse()).is_some()
    }

    /// Unique root decomposition `self = root^exponent` with the root
    /// not a proper power.  `None` for the identity.
    pub fn primitive_root(&self) -> Option<(Word, u32)> {
        let (core, conj) = self.cyclic_reduce();
        if core.is_empty() {
            return None;
        }
        let n = core.len();
        let mut period = n;
        for d in 1..=n / 2 {
            if n % d != 0 {
                continue;
            }
            if (d..n).all(|i| core.letters[i] == core.letters[i - d]) {
                period = d;
                break;
            }
        }
        let root_core = Word::from_reduced(self.rank, core.letters[..period].to_vec());
        let root = root_core.conjugated(&conj);
        Some((root, (n / period) as u32))
    }

    /// Membership in `⟨a⟩`: the `k` with `self = a^k`, if any.
    /// `k = 0` exactly when `self` is trivial.
    pub fn cyclic_member(&self, a: &Word) -> Option<i64> {
        assert_eq!(self.rank, a.rank);
        if self.is_empty() {
            return Some(0);
        }
        let (ra, ea) = a.primitive_root()?;
        let (rv, ev) = self.primitive_root().expect("nonempty");
        if ev % ea != 0 {
            return None;
        }
        let k = (ev / ea) as i64;
        if rv == ra {
            Some(k)
        } else if rv == ra.inverse() {
            Some(-k)
        } else {
            None
        }
    }

    pub fn parse(s: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
        let rank = alphabet.rank();
        let mut buf = Vec::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            let l = alphabet
                .letter_of(ch)
                .ok_or(WordError::Parse { position, ch })?;
            push_reduced(&mut buf, l);
        }
        Ok(Word { rank, letters: buf })
    }

    pub fn display(&self, alphabet: &Alphabet) -> String {
        assert!(alphabet.rank() >= self.rank);
        self.letters.iter().map(|&l| alphabet.char_of(l)).collect()
    }
}

fn rotate(w: &[Letter], k: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[k..]);
    out.extend_from_slice(&w[..k]);
    out
}

/// Total order on letters used for canonical rotations: `+1 < -1 < +2 < …`.
#[inline]
fn letter_key(l: Letter) -> (u32, bool) {
    (l.unsigned_abs(), l < 0)
}

/// Index of the least cyclic rotation (Booth-style two-pointer scan).
pub(crate) fn least_rotation_start(w: &[Letter]) -> usize {
    let n = w.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| letter_key(w[i % n]);
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (at(i + k), at(j + k));
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i = i + k + 1;
            if i <= j {
                i = j + 1;
            }
        } else {
            j = j + k + 1;
            if j <= i {
                j = i + 1;
            }
        }
        k = 0;
    }
    i.min(j)
}

/// Conjugacy class of a word: stored as the least rotation of the
/// cyclic reduction, so equal classes compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClass {
    rep: Word,
}

impl fmt::Debug for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConjClass({:?})", self.rep)
    }
}

impl ConjClass {
    pub fn new(w: &Word) -> ConjClass {
        let (core, _) = w.cyclic_reduce();
        let k = least_rotation_start(core.letters());
        ConjClass {
            rep: Word::from_reduced(w.rank(), rotate(core.letters(), k)),
        }
    }

    /// Canonical cyclically reduced representative.
    pub fn representative(&self) -> &Word {
        &self.rep
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn inverse_class(&self) -> ConjClass {
        ConjClass::new(&self.rep.inverse())
    }

    /// Equality of the underlying unoriented loops.
    pub fn unoriented_eq(&self, other: &ConjClass) -> bool {
        self == other || *self == other.inverse_class()
    }

    /// Hashable key identifying the unoriented class.
    pub fn unoriented_key(&self) -> Vec<Letter> {
        let inv = self.inverse_class();
        if self.rep.letters() <= inv.rep.letters() {
            self.rep.letters().to_vec()
        } else {
            inv.rep.letters().to_vec()
        }
    }
}

/// All reduced words of length at most `max_len`, ordered by length
/// and then lexicographically in the letter order `+1 < -1 < +2 < …`.
pub fn enumerate_ball(rank: u16, max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::identity(rank)];
    let mut layer: Vec<Word> = vec![Word::identity(rank)];
    let letters: Vec<Letter> = (1..=rank as Letter).flat_map(|i| [i, -i]).collect();
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * (2 * rank as usize - 1));
        for w in &layer {
            for &l in &letters {
                if w.letters.last() == Some(&-l) {
                    continue;
                }
                let mut v = w.letters.clone();
                v.push(l);
                next.push(Word::from_reduced(rank, v));
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn w(s: &str) -> Word {
        Word::parse(s, &Alphabet::new("xyz").unwrap()).unwrap()
    }

    fn w2(s: &str) -> Word {
        Word::parse(s, &Alphabet::new("xy").unwrap()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        // [x, x⁻¹, y] → [y]
        assert_eq!(Word::from_letters(2, [1, -1, 2]).unwrap(), w2("y"));
        // [] → []
        assert_eq!(Word::from_letters(2, []).unwrap(), Word::identity(2));
        // [x, y, y⁻¹, x] → [x, x]
        assert_eq!(Word::from_letters(2, [1, 2, -2, 1]).unwrap(), w2("xx"));
        // nested cancellation
        assert_eq!(Word::from_letters(2, [1, 2, -2, -1]).unwrap(), Word::identity(2));
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        assert!(matches!(
            Word::from_letters(2, [3]),
            Err(WordError::LetterOutOfRange { letter: 3, rank: 2 })
        ));
        assert!(Word::from_letters(2, [0]).is_err());
    }

    #[test]
    fn mul_inv_examples() {
        assert_eq!(w("x").mul(&w("X")), Word::identity(3));
        assert_eq!(w("xy").inverse(), w("YX"));
        assert_eq!(w("xy").mul(&w("Yz")), w("xz"));
    }

    #[test]
    fn parse_display_roundtrip() {
        let a = Alphabet::new("xyz").unwrap();
        let v = Word::parse("xYx", &a).unwrap();
        assert_eq!(v.letters(), &[1, -2, 1]);
        assert_eq!(v.display(&a), "xYx");
        assert!(Word::parse("x?z", &a).is_err());
        assert_eq!(Word::parse("", &a).unwrap(), Word::identity(3));
    }

    #[test]
    fn cyclic_reduce_examples() {
        // [x,y,x⁻¹] → core [y], conj [x]
        let (core, conj) = w("xyX").cyclic_reduce();
        assert_eq!(core, w("y"));
        assert_eq!(conj, w("x"));
        // [y] → core [y], conj []
        let (core, conj) = w("y").cyclic_reduce();
        assert_eq!(core, w("y"));
        assert!(conj.is_empty());
        // brute-force strip oracle on [x⁻¹, y, x, x]
        let v = w("Xyxx");
        let (core, conj) = v.cyclic_reduce();
        let oracle = {
            let mut ls = v.letters().to_vec();
            let mut pre = Vec::new();
            while ls.len() >= 2 && ls[0] == -ls[ls.len() - 1] {
                pre.push(ls[0]);
                ls = ls[1..ls.len() - 1].to_vec();
            }
            (ls, pre)
        };
        assert_eq!(core.letters(), &oracle.0[..]);
        assert_eq!(conj.letters(), &oracle.1[..]);
        assert_eq!(Word::product(3, [&conj, &core, &conj.inverse()]), v);
    }

    #[test]
    fn conjugacy_examples() {
        // (xy, yx): witness conjugates
        let c = w("xy").is_conjugate(&w("yx")).unwrap();
        assert_eq!(w("xy").conjugated(&c), w("yx"));
        // (x, y) not conjugate
        assert!(w("x").is_conjugate(&w("y")).is_none());
        // (xyx⁻¹, y)
        let c = w("xyX").is_conjugate(&w("y")).unwrap();
        assert_eq!(w("xyX").conjugated(&c), w("y"));
    }

    #[test]
    fn conjugacy_is_equivalence_on_samples() {
        let ball = enumerate_ball(2, 4);
        for u in ball.iter().step_by(7) {
            assert!(u.is_conjugate(u).is_some());
            for v in ball.iter().step_by(11) {
                let uv = u.is_conjugate(v);
                let vu = v.is_conjugate(u);
                assert_eq!(uv.is_some(), vu.is_some());
                if let Some(c) = uv {
                    assert_eq!(u.conjugated(&c), *v);
                }
            }
        }
    }

    #[test]
    fn primitive_root_examples() {
        let xy3 = w("xyxyxy");
        assert_eq!(xy3.primitive_root().unwrap(), (w("xy"), 3));
        assert_eq!(w("x").primitive_root().unwrap(), (w("x"), 1));
        // x(yy)x⁻¹ → root xyx⁻¹, exp 2 (period detection on the cyclic core)
        assert_eq!(w("xyyX").primitive_root().unwrap(), (w("xyX"), 2));
        assert!(Word::identity(2).primitive_root().is_none());
    }

    #[test]
    fn primitive_root_reconstructs() {
        for v in enumerate_ball(2, 5) {
            if v.is_empty() {
                continue;
            }
            let (root, e) = v.primitive_root().unwrap();
            assert_eq!(root.pow(e as i64), v, "root^e != w for {v:?}");
            assert_eq!(root.primitive_root().unwrap().1, 1, "root of {v:?} is a proper power");
        }
    }

    #[test]
    fn cyclic_member_examples() {
        let x = w("x");
        assert_eq!(x.pow(4).cyclic_member(&x.pow(2)), Some(2));
        assert_eq!(x.pow(3).cyclic_member(&x.pow(2)), None);
        assert_eq!(w("xy").pow(6).cyclic_member(&w("xy").pow(3)), Some(2));
        assert_eq!(x.pow(-4).cyclic_member(&x.pow(2)), Some(-2));
        assert_eq!(Word::identity(3).cyclic_member(&x), Some(0));
    }

    #[test]
    fn cyclic_member_brute_force() {
        // brute-force k ≤ |v|/|a| check on small samples
        let ball = enumerate_ball(2, 3);
        for a in ball.iter().filter(|a| !a.is_empty()).step_by(3) {
            for v in ball.iter().step_by(5) {
                let got = v.cyclic_member(a);
                let bound = (v.len() / a.len().max(1)) as i64 + 1;
                let expect = (-bound..=bound).find(|&k| a.pow(k) == *v);
                assert_eq!(got, expect, "cyclic_member({v:?}, {a:?})");
            }
        }
    }

    #[test]
    fn commuting_iff_same_root_small() {
        // exhaustive on short words in rank 2
        let us = enumerate_ball(2, 3);
        let vs = enumerate_ball(2, 4);
        for u in &us {
            if u.is_empty() {
                continue;
            }
            for v in &vs {
                if v.is_empty() {
                    continue;
                }
                let commute = u.mul(v) == v.mul(u);
                let same_root = {
                    let (ru, _) = u.primitive_root().unwrap();
                    let (rv, _) = v.primitive_root().unwrap();
                    ru == rv || ru == rv.inverse()
                };
                assert_eq!(commute, same_root, "u={u:?} v={v:?}");
            }
        }
    }

    #[test]
    fn least_rotation_matches_naive() {
        for v in enumerate_ball(2, 6).iter().step_by(3) {
            if v.is_empty() || !v.is_cyclically_reduced() {
                continue;
            }
            let fast = least_rotation_start(v.letters());
            let naive = (0..v.len())
                .min_by(|&a, &b| {
                    let ra: Vec<_> = rotate(v.letters(), a).iter().map(|&l| letter_key(l)).collect();
                    let rb: Vec<_> = rotate(v.letters(), b).iter().map(|&l| letter_key(l)).collect();
                    ra.cmp(&rb)
                })
                .unwrap();
            assert_eq!(
                rotate(v.letters(), fast),
                rotate(v.letters(), naive),
                "least rotation of {v:?}"
            );
        }
    }

    #[test]
    fn conj_class_canonical() {
        let c1 = ConjClass::new(&w("xyX"));
        let c2 = ConjClass::new(&w("y"));
        assert_eq!(c1, c2);
        assert!(c1.unoriented_eq(&ConjClass::new(&w("Y"))));
        assert!(!c1.unoriented_eq(&ConjClass::new(&w("x"))));
        let k1 = ConjClass::new(&w("xy")).unoriented_key();
        let k2 = ConjClass::new(&w("YX")).unoriented_key();
        assert_eq!(k1, k2);
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(enumerate_ball(2, 0).len(), 1);
        assert_eq!(enumerate_ball(2, 1).len(), 5);
        assert_eq!(enumerate_ball(2, 2).len(), 17);
        assert_eq!(enumerate_ball(2, 4).len(), 161);
        let b = enumerate_ball(2, 3);
        assert_eq!(b.iter().collect::<std::collections::BTreeSet<_>>().len(), b.len());
    }

    #[test]
    fn length_subadditive() {
        let ball = enumerate_ball(2, 4);
        for u in ball.iter().step_by(13) {
            for v in ball.iter().step_by(17) {
                assert!(u.mul(v).len() <= u.len() + v.len());
            }
        }
    }

    #[test]
    fn debug_format_is_readable() {
        assert_eq!(format!("{:?}", Word::from_letters(2, [1, -2]).unwrap()), "Word(r2, aB)");
    }
}
