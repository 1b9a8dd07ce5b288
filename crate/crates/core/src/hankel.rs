//! Moment sequences and their Hankel matrices.
//!
//! For a sequence s_0, ..., s_l with n = floor(l/2), the Hankel matrix is
//! S_n = (s_{i+j})_{i,j=0..n}. Everything a moment problem's solvability
//! depends on lives here: the exact inertia of S_n, the leading principal
//! minors det S_0, ..., det S_n, the normal indices (the j with
//! det S_{j-1} != 0), the Hankel rank of the sequence, the recursive
//! generation test, and inertia-preserving Hankel extensions.

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{format_rat, parse_rat, Rat};

/// Finite real (rational) moment sequence s_0, ..., s_l.
///
/// Problem inputs are nonempty; the empty sequence appears only as the
/// residual of a fully reduced Schur chain. Serializes as a list of
/// rational strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    entries: Vec<Rat>,
}

impl Serialize for MomentSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.entries.iter().map(format_rat).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MomentSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let entries = strings
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(MomentSequence { entries })
    }
}

/// Length parity of a sequence: even means l = 2n, odd means l = 2n + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl MomentSequence {
    /// Builds a problem input; rejects the empty list.
    pub fn new(entries: Vec<Rat>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(MomentSequence { entries })
    }

    /// Builds an internal sequence that may be empty (chain residuals).
    pub fn from_entries(entries: Vec<Rat>) -> Self {
        MomentSequence { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        MomentSequence {
            entries: entries.iter().map(|&e| crate::rational::int(e)).collect(),
        }
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Index of the last prescribed moment; -1 when empty.
    pub fn ell(&self) -> isize {
        self.entries.len() as isize - 1
    }

    /// n = floor(l / 2). Panics on the empty sequence.
    pub fn n(&self) -> usize {
        assert!(!self.is_empty(), "n() of an empty sequence");
        (self.entries.len() - 1) / 2
    }

    pub fn parity(&self) -> Parity {
        if self.entries.len() % 2 == 1 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn get(&self, j: usize) -> Option<&Rat> {
        self.entries.get(j)
    }

    /// Index of the first nonzero moment.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    /// True when s_j = 0 for all j <= k (indices beyond the end count as 0).
    pub fn is_zero_through(&self, k: usize) -> bool {
        self.entries.iter().take(k + 1).all(Zero::is_zero)
    }

    pub fn is_all_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        MomentSequence {
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }
}

/// Hankel matrix (s_{i+j})_{i,j=0..size-1} of a moment sequence.
#[derive(Clone, Debug)]
pub struct HankelMatrix {
    mat: Matrix,
}

impl HankelMatrix {
    /// Hankel matrix of the given size; requires 2(size - 1) <= l.
    pub fn new(s: &MomentSequence, size: usize) -> Result<Self> {
        if size == 0 || 2 * (size - 1) >= s.len() {
            return Err(Error::IndexOutOfRange {
                index: size,
                len: s.len(),
            });
        }
        Ok(HankelMatrix {
            mat: Matrix::from_fn(size, size, |i, j| s.entries[i + j].clone()),
        })
    }

    /// The full matrix S_n with n = floor(l/2).
    pub fn full(s: &MomentSequence) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptySequence);
        }
        HankelMatrix::new(s, s.n() + 1)
    }

    pub fn size(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn det(&self) -> Rat {
        self.mat.det()
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    /// Exact signature by symmetric congruence elimination.
    pub fn inertia(&self) -> Inertia {
        let (nu_plus, nu_zero, nu_minus) = self.mat.inertia();
        Inertia {
            nu_plus,
            nu_zero,
            nu_minus,
        }
    }
}

/// Inertia (nu_plus, nu_zero, nu_minus) of a real symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub nu_plus: usize,
    pub nu_zero: usize,
    pub nu_minus: usize,
}

impl Inertia {
    pub fn size(&self) -> usize {
        self.nu_plus + self.nu_zero + self.nu_minus
    }

    pub fn rank(&self) -> usize {
        self.nu_plus + self.nu_minus
    }
}

/// The normal indices n_1 < ... < n_N of a Hankel matrix: the j in 1..=n+1
/// with det S_{j-1} != 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NormalIndexSet {
    indices: Vec<usize>,
}

impl NormalIndexSet {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn count(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Largest normal index n_N, or 0 when there is none.
    pub fn largest(&self) -> usize {
        self.indices.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, j: usize) -> bool {
        self.indices.binary_search(&j).is_ok()
    }
}

/// Leading principal minors det S_0, ..., det S_n of the Hankel matrix.
pub fn leading_minors(s: &MomentSequence) -> Vec<Rat> {
    if s.is_empty() {
        return Vec::new();
    }
    let full = Matrix::from_fn(s.n() + 1, s.n() + 1, |i, j| s.entries[i + j].clone());
    (1..=s.n() + 1).map(|k| full.leading(k).det()).collect()
}

/// All normal indices of S_n.
pub fn normal_indices(s: &MomentSequence) -> NormalIndexSet {
    let indices = leading_minors(s)
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(k, _)| k + 1)
        .collect();
    NormalIndexSet { indices }
}

/// Hankel rank of the sequence (s, 2n): n + 1 when det S_n != 0, otherwise
/// the largest normal index (0 for the sequence that vanishes through s_n).
///
/// By the Frobenius rank theorem this agrees with the span characterization:
/// the smallest r such that column r of the extended Hankel structure lies in
/// the span of the first r columns. Odd-length inputs use their first 2n + 1
/// entries.
pub fn hankel_rank(s: &MomentSequence) -> usize {
    let set = normal_indices(s);
    if set.contains(s.n() + 1) {
        s.n() + 1
    } else {
        set.largest()
    }
}

/// Recursive-generation test.
///
/// With r the Hankel rank, looks for alpha_0, ..., alpha_{r-1} with
/// s_j = alpha_0 s_{j-r} + ... + alpha_{r-1} s_{j-1} for all r <= j <= l,
/// and returns the witness on success. The all-zero sequence is recursively
/// generated by the empty recursion. A nondegenerate sequence of even length
/// leaves one degree of freedom; the witness fixes s_{2n+1} = 0.
pub fn recursive_generation(s: &MomentSequence) -> Option<Vec<Rat>> {
    let r = hankel_rank(s);
    if r == 0 {
        return if s.is_all_zero() { Some(Vec::new()) } else { None };
    }
    let n = s.n();
    // target column v_r = (s_r, ..., s_{r+n}); entries past l are only needed
    // in the nondegenerate even case, where s_{2n+1} := 0 by convention
    let entry = |j: usize| -> Rat {
        s.get(j).cloned().unwrap_or_else(Rat::zero)
    };
    let cols = Matrix::from_fn(n + 1, r, |i, j| entry(i + j));
    let target: Vec<Rat> = (0..=n).map(|i| entry(r + i)).collect();
    let alphas = cols.solve(&target)?;
    // verify the recursion over the whole prescribed range
    for j in r..s.len() {
        let mut acc = Rat::zero();
        for (i, alpha) in alphas.iter().enumerate() {
            acc += alpha * &s.entries[j - r + i];
        }
        if acc != s.entries[j] {
            return None;
        }
    }
    Some(alphas)
}

/// Hankel extension preserving the negative index.
///
/// For an even-length sequence, decides whether two further moments
/// (s_{2n+1}, s_{2n+2}) exist with nu_minus(S_{n+1}) = nu_minus(S_n), and
/// returns such a witness. In the degenerate case this happens exactly when
/// the sequence is recursively generated, and continuing the recursion two
/// steps produces the witness; a nondegenerate sequence always extends.
pub fn extend_preserving_inertia(s: &MomentSequence) -> Option<(Rat, Rat)> {
    let alphas = recursive_generation(s)?;
    let r = alphas.len();
    let mut extended = s.entries.clone();
    // all-zero sequence: extend by zeros
    if r == 0 {
        extended.push(Rat::zero());
        extended.push(Rat::zero());
    } else {
        for _ in 0..2 {
            let j = extended.len();
            let mut acc = Rat::zero();
            for (i, alpha) in alphas.iter().enumerate() {
                acc += alpha * &extended[j - r + i];
            }
            extended.push(acc);
        }
    }
    let ext = MomentSequence::from_entries(extended);
    let old = HankelMatrix::full(s).expect("nonempty").inertia();
    let new = HankelMatrix::new(&ext, s.n() + 2).expect("extended").inertia();
    assert_eq!(
        old.nu_minus, new.nu_minus,
        "recursion continuation must preserve the negative index"
    );
    let l = ext.entries.len();
    Some((ext.entries[l - 2].clone(), ext.entries[l - 1].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn sequence_basics() {
        let s = MomentSequence::from_ints(&[1, 0, 1, 0, 1]);
        assert_eq!(s.ell(), 4);
        assert_eq!(s.n(), 2);
        assert!(matches!(s.parity(), Parity::Even));
        let t = MomentSequence::from_ints(&[-1, 0]);
        assert_eq!(t.n(), 0);
        assert!(matches!(t.parity(), Parity::Odd));
        assert!(MomentSequence::new(vec![]).is_err());
        assert_eq!(MomentSequence::from_ints(&[0, 0, 3]).first_nonzero(), Some(2));
    }

    #[test]
    fn inertia_examples() {
        // eigenvalues 2, 1, 0
        let s = MomentSequence::from_ints(&[1, 0, 1, 0, 1]);
        let h = HankelMatrix::full(&s).unwrap();
        assert_eq!(
            h.inertia(),
            Inertia { nu_plus: 2, nu_zero: 1, nu_minus: 0 }
        );

        let z = MomentSequence::from_ints(&[0, 0, 0, 0, 0]);
        assert_eq!(
            HankelMatrix::full(&z).unwrap().inertia(),
            Inertia { nu_plus: 0, nu_zero: 3, nu_minus: 0 }
        );

        // antidiagonal with +-1 eigenvalues
        let a = MomentSequence::from_ints(&[0, 1, 0]);
        assert_eq!(
            HankelMatrix::full(&a).unwrap().inertia(),
            Inertia { nu_plus: 1, nu_zero: 0, nu_minus: 1 }
        );
    }

    #[test]
    fn normal_index_examples() {
        let s = MomentSequence::from_ints(&[1, 0, 1, 0, 1]);
        assert_eq!(normal_indices(&s).indices(), &[1, 2]);

        let t = MomentSequence::from_ints(&[0, 0, 1, 0, 0]);
        assert_eq!(normal_indices(&t).indices(), &[3]);

        let z = MomentSequence::from_ints(&[0, 0, 0]);
        assert!(normal_indices(&z).is_empty());
    }

    #[test]
    fn minors_match_direct_determinants() {
        let s = MomentSequence::from_ints(&[2, -1, 3, 0, 5, 1, -2]);
        let minors = leading_minors(&s);
        for (k, minor) in minors.iter().enumerate() {
            let direct = HankelMatrix::new(&s, k + 1).unwrap().det();
            assert_eq!(minor, &direct);
        }
    }

    #[test]
    fn hankel_rank_examples() {
        assert_eq!(hankel_rank(&MomentSequence::from_ints(&[1, 1, 1, 1, 1])), 1);
        assert_eq!(hankel_rank(&MomentSequence::from_ints(&[1, 0, 1, 0, 1])), 2);
        assert_eq!(hankel_rank(&MomentSequence::from_ints(&[0, 0, 0, 0, 0])), 0);
        // nondegenerate: full rank n + 1
        assert_eq!(hankel_rank(&MomentSequence::from_ints(&[1, 0, 2])), 2);
        // zero square part but nonzero tail still has rank 0
        assert_eq!(hankel_rank(&MomentSequence::from_ints(&[0, 0, 1])), 0);
    }

    #[test]
    fn recursive_generation_examples() {
        let s = MomentSequence::from_ints(&[1, 1, 1, 1, 1]);
        assert_eq!(recursive_generation(&s), Some(vec![int(1)]));

        let t = MomentSequence::from_ints(&[1, 1, 1, 1, 2]);
        assert_eq!(recursive_generation(&t), None);

        let u = MomentSequence::from_ints(&[1, 0, 1, 0, 1]);
        assert_eq!(recursive_generation(&u), Some(vec![int(1), int(0)]));

        let z = MomentSequence::from_ints(&[0, 0, 0, 0, 0]);
        assert_eq!(recursive_generation(&z), Some(vec![]));

        // basic type-B sequence: rank 0 but a nonzero tail entry
        let b = MomentSequence::from_ints(&[0, 0, 1]);
        assert_eq!(recursive_generation(&b), None);
    }

    #[test]
    fn extension_examples() {
        let s = MomentSequence::from_ints(&[1, 1, 1, 1, 1]);
        assert_eq!(extend_preserving_inertia(&s), Some((int(1), int(1))));

        let t = MomentSequence::from_ints(&[1, 1, 1, 1, 2]);
        assert_eq!(extend_preserving_inertia(&t), None);

        let z = MomentSequence::from_ints(&[0, 0, 0, 0, 0]);
        assert_eq!(extend_preserving_inertia(&z), Some((int(0), int(0))));

        // nondegenerate sequences always extend
        let nd = MomentSequence::from_ints(&[2, 0, 1]);
        assert!(extend_preserving_inertia(&nd).is_some());
        // indefinite nondegenerate
        let ind = MomentSequence::from_ints(&[0, 1, 0]);
        assert!(extend_preserving_inertia(&ind).is_some());
    }
}
