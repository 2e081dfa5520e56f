//! The finite Weyl group of GSp_2g as signed permutations, together with the
//! S_g permutation statistics that control lengths of admissible elements.
//!
//! All indices are 1-based: a permutation of degree n maps {1, …, n} to
//! itself, and `images[i-1]` stores the image of `i`.

use std::fmt;

use itertools::Itertools;

use crate::error::Error;

/// Checks that `images` is a bijection of {1, …, n}.
fn is_bijection(images: &[usize]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &x in images {
        if x == 0 || x > n || seen[x - 1] {
            return false;
        }
        seen[x - 1] = true;
    }
    true
}

/// A permutation of {1, …, g} in one-line notation (the S_g-component σ).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallPermutation {
    images: Vec<usize>,
}

impl SmallPermutation {
    pub fn identity(g: usize) -> Self {
        Self {
            images: (1..=g).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        if images.is_empty() {
            return Err(Error::InvalidGenus);
        }
        if !is_bijection(&images) {
            return Err(Error::NotAPermutation { n: images.len() });
        }
        Ok(Self { images })
    }

    /// Builds a permutation of {1, …, g} from disjoint cycles.
    pub fn from_cycles(g: usize, cycles: &[&[usize]]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (1..=g).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let from = cycle[k];
                let to = cycle[(k + 1) % cycle.len()];
                if from == 0 || from > g || images[from - 1] != from {
                    return Err(Error::NotAPermutation { n: g });
                }
                images[from - 1] = to;
            }
        }
        Self::new(images)
    }

    pub fn genus(&self) -> usize {
        self.images.len()
    }

    /// Image of `i`; panics unless 1 ≤ i ≤ g.
    pub fn apply(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.images.len(), "index {i} out of range");
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Self { images }
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.genus(),
            other.genus(),
            "cannot compose permutations of different degree"
        );
        Self {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.genus()).all(|i| self.apply(self.apply(i)) == i)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.genus()).filter(|&i| self.apply(i) == i).collect()
    }

    /// The disjoint cycles of order ≥ 2, sorted by minimum element.
    pub fn nontrivial_cycles(&self) -> Vec<Cycle> {
        let g = self.genus();
        let mut seen = vec![false; g];
        let mut out = Vec::new();
        for start in 1..=g {
            if seen[start - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(Cycle::new(cycle));
        }
        out
    }

    /// The eight statistics used by the length formula; everything counted
    /// directly from the definitions.
    pub fn stats(&self) -> PermStats {
        let inv = self.inverse();
        PermStats {
            a: nestings(self),
            a_inv: nestings(&inv),
            b: fixed_straddles(self),
            c: crossings(self),
            c_inv: crossings(&inv),
            asc: (1..=self.genus()).filter(|&i| i < self.apply(i)).count(),
            desc_chain: (1..=self.genus())
                .filter(|&i| {
                    let s = self.apply(i);
                    self.apply(s) < s && s < i
                })
                .count(),
            length: inversions(self),
        }
    }

    /// Whether some transposed pair straddles `e`, i.e. ∃i: i < e < σ(i).
    /// Only defined for involutions; panics otherwise.
    pub fn embraces(&self, e: usize) -> bool {
        assert!(
            self.is_involution(),
            "embraces is only defined for involutions"
        );
        assert!(e >= 1 && e <= self.genus(), "index {e} out of range");
        (1..e).any(|i| e < self.apply(i))
    }

    /// All g! permutations, in lexicographic one-line order.
    pub fn all(g: usize) -> Vec<Self> {
        (1..=g)
            .permutations(g)
            .map(|images| Self { images })
            .collect()
    }
}

impl fmt::Display for SmallPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

fn inversions(p: &SmallPermutation) -> usize {
    let g = p.genus();
    let mut n = 0;
    for i in 1..=g {
        for j in i + 1..=g {
            if p.apply(i) > p.apply(j) {
                n += 1;
            }
        }
    }
    n
}

/// A_σ = #{(i,j) : i < j < σ(j) < σ(i)}.
fn nestings(p: &SmallPermutation) -> usize {
    let g = p.genus();
    let mut n = 0;
    for i in 1..=g {
        for j in i + 1..=g {
            if j < p.apply(j) && p.apply(j) < p.apply(i) {
                n += 1;
            }
        }
    }
    n
}

/// B_σ = #{(i,j) : i < j = σ(j) < σ(i)}.
fn fixed_straddles(p: &SmallPermutation) -> usize {
    let g = p.genus();
    let mut n = 0;
    for i in 1..=g {
        for j in i + 1..=g {
            if p.apply(j) == j && j < p.apply(i) {
                n += 1;
            }
        }
    }
    n
}

/// C_σ = #{(i,j) : i < j < σ(i) < σ(j)}.
fn crossings(p: &SmallPermutation) -> usize {
    let g = p.genus();
    let mut n = 0;
    for i in 1..=g {
        for j in i + 1..=g {
            if j < p.apply(i) && p.apply(i) < p.apply(j) {
                n += 1;
            }
        }
    }
    n
}

/// Pair/triple statistics of a permutation σ ∈ S_g.
///
/// `b` is shared between σ and σ⁻¹ (B_σ = B_{σ⁻¹}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermStats {
    pub a: usize,
    pub a_inv: usize,
    pub b: usize,
    pub c: usize,
    pub c_inv: usize,
    /// #{i : i < σ(i)}
    pub asc: usize,
    /// #{i : σ(σ(i)) < σ(i) < i}
    pub desc_chain: usize,
    /// Inversion count ℓ(σ).
    pub length: usize,
}

impl PermStats {
    /// 2(A_σ + A_{σ⁻¹} + B_σ) + C_σ + C_{σ⁻¹} + asc + desc_chain; equals ℓ(σ).
    pub fn length_identity_rhs(&self) -> usize {
        2 * (self.a + self.a_inv + self.b) + self.c + self.c_inv + self.asc + self.desc_chain
    }
}

/// A sign vector u ∈ F_2^g.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    bits: Vec<u8>,
}

impl SignVector {
    pub fn zeros(g: usize) -> Self {
        Self { bits: vec![0; g] }
    }

    pub fn new(bits: Vec<u8>) -> Result<Self, Error> {
        if bits.is_empty() {
            return Err(Error::InvalidGenus);
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidSignBit);
        }
        Ok(Self { bits })
    }

    pub fn genus(&self) -> usize {
        self.bits.len()
    }

    /// Entry u(i); panics unless 1 ≤ i ≤ g.
    pub fn bit(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.bits.len(), "index {i} out of range");
        self.bits[i - 1]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// All 2^g sign vectors.
    pub fn all(g: usize) -> Vec<Self> {
        (0..1usize << g)
            .map(|mask| Self {
                bits: (0..g).map(|k| ((mask >> k) & 1) as u8).collect(),
            })
            .collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.bits.iter().join(","))
    }
}

/// An element of the Weyl group W of GSp_2g, stored as a permutation of
/// {1, …, 2g} commuting with i ↦ 2g+1−i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<usize>,
}

impl SignedPermutation {
    pub fn identity(g: usize) -> Self {
        Self {
            images: (1..=2 * g).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidGenus);
        }
        if !is_bijection(&images) {
            return Err(Error::NotAPermutation { n });
        }
        for i in 1..=n {
            if images[n - i] != n + 1 - images[i - 1] {
                return Err(Error::NotSymplectic { i });
            }
        }
        Ok(Self { images })
    }

    /// Assembles w from its (u, σ) decomposition: w(i) = σ(i) when u(i) = 0
    /// and w(i) = 2g+1−σ(i) when u(i) = 1, extended by the symplectic
    /// condition. Panics on genus mismatch.
    pub fn from_parts(u: &SignVector, sigma: &SmallPermutation) -> Self {
        assert_eq!(
            u.genus(),
            sigma.genus(),
            "sign vector and permutation have different genus"
        );
        let g = u.genus();
        let mut images = vec![0; 2 * g];
        for i in 1..=g {
            let target = if u.bit(i) == 0 {
                sigma.apply(i)
            } else {
                2 * g + 1 - sigma.apply(i)
            };
            images[i - 1] = target;
            images[2 * g - i] = 2 * g + 1 - target;
        }
        Self { images }
    }

    pub fn genus(&self) -> usize {
        self.images.len() / 2
    }

    /// Image of `i`; panics unless 1 ≤ i ≤ 2g.
    pub fn apply(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.images.len(), "index {i} out of range");
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Self { images }
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.genus(),
            other.genus(),
            "cannot compose elements of different genus"
        );
        Self {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// u(i) = 1 iff w(i) > g.
    pub fn sign_vector(&self) -> SignVector {
        let g = self.genus();
        SignVector {
            bits: (1..=g).map(|i| u8::from(self.apply(i) > g)).collect(),
        }
    }

    /// The S_g-component: σ(i) = w(i) reflected back below g when u(i) = 1.
    pub fn small_permutation(&self) -> SmallPermutation {
        let g = self.genus();
        SmallPermutation {
            images: (1..=g)
                .map(|i| {
                    let x = self.apply(i);
                    if x > g {
                        2 * g + 1 - x
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    pub fn parts(&self) -> (SignVector, SmallPermutation) {
        (self.sign_vector(), self.small_permutation())
    }

    /// F(w) = {i ≤ g : w(i) = i}, sorted.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.genus()).filter(|&i| self.apply(i) == i).collect()
    }

    /// The cycles of the S_g-component, including an order-1 cycle (i)
    /// exactly when σ(i) = i but w(i) ≠ i (i.e. u(i) = 1). Every i ≤ g lies
    /// in exactly one of `cycles()` or `fixed_points()`.
    pub fn cycles(&self) -> Vec<Cycle> {
        let (u, sigma) = self.parts();
        let mut out = sigma.nontrivial_cycles();
        for i in 1..=self.genus() {
            if sigma.apply(i) == i && u.bit(i) == 1 {
                out.push(Cycle::new(vec![i]));
            }
        }
        out.sort_by_key(|z| z.min());
        out
    }

    /// The reflection swapping a ↔ b and (2g+1−a) ↔ (2g+1−b). When
    /// a + b = 2g+1 the two swaps coincide and only one is applied.
    pub fn reflection_swap(g: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a >= 1 && b >= 1 && a <= 2 * g && b <= 2 * g);
        let mut images: Vec<usize> = (1..=2 * g).collect();
        images.swap(a - 1, b - 1);
        if a + b != 2 * g + 1 {
            images.swap(2 * g - a, 2 * g - b);
        }
        Self { images }
    }

    /// The sign flip at i: w(i) = 2g+1−i, all other entries ≤ g fixed.
    pub fn sign_flip(g: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= g);
        Self::reflection_swap(g, i, 2 * g + 1 - i)
    }

    /// All 2^g g! elements of W.
    pub fn all(g: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for sigma in SmallPermutation::all(g) {
            for u in SignVector::all(g) {
                out.push(Self::from_parts(&u, &sigma));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

/// A cycle (c₁ … c_l) up to rotation, canonicalized with the minimum
/// element first. An order-1 cycle (i) is distinct from a fixed point: it
/// records a coordinate with σ(i) = i but u(i) = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    elements: Vec<usize>,
}

impl Cycle {
    /// Rotates so the minimum element comes first. Panics on an empty or
    /// repeating tuple.
    pub fn new(elements: Vec<usize>) -> Self {
        assert!(!elements.is_empty(), "a cycle cannot be empty");
        let pos = elements
            .iter()
            .enumerate()
            .min_by_key(|&(_, &x)| x)
            .map(|(k, _)| k)
            .unwrap();
        let mut rotated = Vec::with_capacity(elements.len());
        for k in 0..elements.len() {
            rotated.push(elements[(pos + k) % elements.len()]);
        }
        let mut dedup = rotated.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), rotated.len(), "cycle entries must be distinct");
        Self { elements: rotated }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn min(&self) -> usize {
        self.elements[0]
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.contains(&i)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.elements.iter().join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(images: &[usize]) -> SignedPermutation {
        SignedPermutation::new(images.to_vec()).unwrap()
    }

    fn small(images: &[usize]) -> SmallPermutation {
        SmallPermutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn from_parts_identity_cases() {
        let w =
            SignedPermutation::from_parts(&SignVector::zeros(2), &SmallPermutation::identity(2));
        assert_eq!(w.one_line(), &[1, 2, 3, 4]);

        let w = SignedPermutation::from_parts(
            &SignVector::new(vec![1]).unwrap(),
            &SmallPermutation::identity(1),
        );
        assert_eq!(w.one_line(), &[2, 1]);
    }

    #[test]
    fn from_parts_mixed() {
        let u = SignVector::new(vec![1, 0]).unwrap();
        let sigma = small(&[2, 1]);
        let w = SignedPermutation::from_parts(&u, &sigma);
        assert_eq!(w.one_line(), &[3, 1, 4, 2]);
        let (u2, s2) = w.parts();
        assert_eq!(u2, u);
        assert_eq!(s2, sigma);
    }

    #[test]
    fn parts_identity_cases() {
        assert_eq!(
            sp(&[1, 2, 3, 4]).parts(),
            (SignVector::zeros(2), SmallPermutation::identity(2))
        );
        let (u, s) = sp(&[2, 1]).parts();
        assert_eq!(u.bits(), &[1]);
        assert!(s.is_identity());
    }

    #[test]
    fn parts_roundtrip_exhaustive() {
        for g in 1..=4 {
            for w in SignedPermutation::all(g) {
                let (u, sigma) = w.parts();
                assert_eq!(SignedPermutation::from_parts(&u, &sigma), w);
            }
        }
    }

    #[test]
    #[should_panic(expected = "different genus")]
    fn from_parts_genus_mismatch_panics() {
        SignedPermutation::from_parts(&SignVector::zeros(2), &SmallPermutation::identity(3));
    }

    #[test]
    fn rejects_non_permutations_and_non_symplectic() {
        assert_eq!(
            SignedPermutation::new(vec![1, 1]),
            Err(Error::NotAPermutation { n: 2 })
        );
        assert!(matches!(
            SignedPermutation::new(vec![2, 1, 3, 4]),
            Err(Error::NotSymplectic { .. })
        ));
        assert_eq!(
            SmallPermutation::new(vec![0, 1]),
            Err(Error::NotAPermutation { n: 2 })
        );
    }

    #[test]
    fn compose_and_inverse() {
        let w = sp(&[3, 1, 4, 2]);
        assert_eq!(SignedPermutation::identity(2).compose(&w), w);
        assert_eq!(sp(&[2, 1]).inverse(), sp(&[2, 1]));
        assert_eq!(w.compose(&w), sp(&[4, 3, 2, 1]));
        assert!(w.inverse().compose(&w).is_identity());
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn apply_out_of_range_panics() {
        sp(&[2, 1]).apply(3);
    }

    #[test]
    fn fixed_points_examples() {
        assert_eq!(SignedPermutation::identity(3).fixed_points(), vec![1, 2, 3]);
        assert!(sp(&[2, 1]).fixed_points().is_empty());
        assert!(sp(&[3, 1, 4, 2]).fixed_points().is_empty());
    }

    #[test]
    fn cycles_examples() {
        assert!(SignedPermutation::identity(2).cycles().is_empty());
        // σ = id, u = (1): one marked order-1 cycle.
        assert_eq!(sp(&[2, 1]).cycles(), vec![Cycle::new(vec![1])]);
        // g = 3, u = 0, σ = (1 2 3).
        let w = SignedPermutation::from_parts(
            &SignVector::zeros(3),
            &SmallPermutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
        );
        assert_eq!(w.cycles(), vec![Cycle::new(vec![1, 2, 3])]);
    }

    #[test]
    fn cycles_partition_with_fixed_points() {
        for g in 1..=4 {
            for w in SignedPermutation::all(g) {
                let fixed = w.fixed_points();
                let cycles = w.cycles();
                let in_cycles: usize = cycles.iter().map(Cycle::order).sum();
                assert_eq!(fixed.len() + in_cycles, g);
                for i in 1..=g {
                    let covered = fixed.contains(&i) as usize
                        + cycles.iter().filter(|z| z.contains(i)).count();
                    assert_eq!(covered, 1, "i = {i} covered incorrectly in {w}");
                }
            }
        }
    }

    #[test]
    fn cycle_canonical_rotation() {
        assert_eq!(Cycle::new(vec![3, 1, 2]).elements(), &[1, 2, 3][..]);
        assert_eq!(Cycle::new(vec![2, 3, 1]).elements(), &[1, 2, 3][..]);
        assert_eq!(Cycle::new(vec![5, 4]).to_string(), "(4 5)");
    }

    #[test]
    fn stats_examples() {
        let s = SmallPermutation::identity(4).stats();
        assert_eq!(
            (
                s.a,
                s.a_inv,
                s.b,
                s.c,
                s.c_inv,
                s.asc,
                s.desc_chain,
                s.length
            ),
            (0, 0, 0, 0, 0, 0, 0, 0)
        );

        let s = small(&[2, 1]).stats();
        assert_eq!(
            (
                s.a,
                s.a_inv,
                s.b,
                s.c,
                s.c_inv,
                s.asc,
                s.desc_chain,
                s.length
            ),
            (0, 0, 0, 0, 0, 1, 0, 1)
        );

        let s = small(&[3, 4, 1, 2]).stats();
        assert_eq!(
            (
                s.a,
                s.a_inv,
                s.b,
                s.c,
                s.c_inv,
                s.asc,
                s.desc_chain,
                s.length
            ),
            (0, 0, 0, 1, 1, 2, 0, 4)
        );
        assert_eq!(s.length, s.length_identity_rhs());
    }

    #[test]
    fn length_identity_small() {
        for g in 1..=5 {
            for sigma in SmallPermutation::all(g) {
                let s = sigma.stats();
                assert_eq!(s.length, s.length_identity_rhs(), "σ = {sigma}");
            }
        }
    }

    #[test]
    fn b_is_inversion_symmetric() {
        for sigma in SmallPermutation::all(5) {
            assert_eq!(sigma.stats().b, sigma.inverse().stats().b);
        }
    }

    #[test]
    fn embraces_examples() {
        let s = SmallPermutation::from_cycles(3, &[&[1, 3]]).unwrap();
        assert!(s.embraces(2));
        assert!(!SmallPermutation::identity(3).embraces(2));
        let s = SmallPermutation::from_cycles(5, &[&[1, 2], &[4, 5]]).unwrap();
        assert!(!s.embraces(3));
    }

    #[test]
    #[should_panic(expected = "only defined for involutions")]
    fn embraces_rejects_non_involution() {
        SmallPermutation::from_cycles(3, &[&[1, 2, 3]])
            .unwrap()
            .embraces(2);
    }

    #[test]
    fn group_sizes() {
        assert_eq!(SignedPermutation::all(1).len(), 2);
        assert_eq!(SignedPermutation::all(2).len(), 8);
        assert_eq!(SignedPermutation::all(3).len(), 48);
    }
}
