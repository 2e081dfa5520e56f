//! The extended affine Weyl group of GSp_2g: semidirect-product arithmetic,
//! extended alcoves, root pairings, the Iwahori–Matsumoto length, simple
//! affine reflections and canonical reduced words.
//!
//! Elements are written in the canonical form x = t^{x0}·w with x0 a
//! cocharacter and w a signed permutation, acting on Z^{2g} by
//! v ↦ w·v + x0. All arithmetic is exact; wall-side tests against the
//! generic base point (1, 2, …, 2g)/(2g+1) are done on scaled integers.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::weyl::SignedPermutation;

/// A cocharacter: v ∈ Z^{2g} with v(i) + v(2g+1−i) constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cocharacter {
    coords: Vec<i64>,
}

impl Cocharacter {
    pub fn new(coords: Vec<i64>) -> Result<Self, Error> {
        let n = coords.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidGenus);
        }
        let c = coords[0] + coords[n - 1];
        for i in 2..=n / 2 {
            if coords[i - 1] + coords[n - i] != c {
                return Err(Error::NonConstantPairSums { i });
            }
        }
        Ok(Self { coords })
    }

    pub fn zero(g: usize) -> Self {
        Self {
            coords: vec![0; 2 * g],
        }
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    /// Coordinate v(i); panics unless 1 ≤ i ≤ 2g.
    pub fn get(&self, i: usize) -> i64 {
        assert!(i >= 1 && i <= self.coords.len(), "index {i} out of range");
        self.coords[i - 1]
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// The common value v(i) + v(2g+1−i).
    pub fn pair_sum(&self) -> i64 {
        self.coords[0] + self.coords[self.coords.len() - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.genus(), other.genus(), "genus mismatch");
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

impl SignedPermutation {
    /// Linear action on cocharacters: (w·v)(i) = v(w⁻¹(i)).
    pub fn act(&self, v: &Cocharacter) -> Cocharacter {
        assert_eq!(self.genus(), v.genus(), "genus mismatch");
        let mut coords = vec![0; 2 * self.genus()];
        for i in 1..=2 * self.genus() {
            coords[self.apply(i) - 1] = v.get(i);
        }
        Cocharacter { coords }
    }
}

/// One of the g² positive roots of GSp_2g, encoded by its canonical GL-pair
/// (a, b): the pairing with any cocharacter v is v(a) − v(b), and a root is
/// sent to a negative one by w⁻¹ exactly when w⁻¹(a) > w⁻¹(b).
///
/// Valid pairs are 1 ≤ a ≤ g and a < b ≤ 2g+1−a; b ≤ g gives e_a − e_b,
/// b = 2g+1−a gives 2e_a − c, anything between gives e_a + e_{2g+1−b} − c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PositiveRoot {
    genus: usize,
    a: usize,
    b: usize,
}

impl PositiveRoot {
    pub fn new(g: usize, a: usize, b: usize) -> Self {
        assert!(
            a >= 1 && a <= g && a < b && b <= 2 * g + 1 - a,
            "not a positive root"
        );
        Self { genus: g, a, b }
    }

    /// The canonical list of all g² positive roots.
    pub fn all(g: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(g * g);
        for a in 1..=g {
            for b in a + 1..=2 * g + 1 - a {
                out.push(Self { genus: g, a, b });
            }
        }
        out
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn gl_pair(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    /// ⟨β, v⟩ = v(a) − v(b).
    pub fn pairing(&self, v: &Cocharacter) -> i64 {
        assert_eq!(self.genus, v.genus(), "genus mismatch");
        v.get(self.a) - v.get(self.b)
    }

    /// Whether w⁻¹β is a negative root.
    pub fn is_inverted_by(&self, w_inv: &SignedPermutation) -> bool {
        w_inv.apply(self.a) > w_inv.apply(self.b)
    }

    /// The coroot β∨ as a pair-sum-zero cocharacter; ⟨β, β∨⟩ = 2.
    pub fn coroot(&self) -> Cocharacter {
        let n = 2 * self.genus;
        let mut coords = vec![0i64; n];
        coords[self.a - 1] += 1;
        coords[self.b - 1] -= 1;
        if self.b != n + 1 - self.a {
            coords[n - self.b] += 1;
            coords[n - self.a] -= 1;
        }
        Cocharacter { coords }
    }

    /// The finite reflection s_β ∈ W.
    pub fn reflection(&self) -> SignedPermutation {
        SignedPermutation::reflection_swap(self.genus, self.a, self.b)
    }
}

/// An affine root ±β + k·δ with wall H: ⟨±β, v⟩ = k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub root: PositiveRoot,
    pub negated: bool,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(root: PositiveRoot, negated: bool, level: i64) -> Self {
        Self {
            root,
            negated,
            level,
        }
    }

    /// Signed GL-pair: (b, a) for the negated root.
    fn signed_pair(&self) -> (usize, usize) {
        let (a, b) = self.root.gl_pair();
        if self.negated {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// The affine reflection across the wall, s_{β,k} = t^{kβ∨}·s_β.
    pub fn reflection(&self) -> AffineElement {
        let k = if self.negated {
            -self.level
        } else {
            self.level
        };
        let coroot = self.root.coroot();
        let x0 = Cocharacter {
            coords: coroot.coords.iter().map(|c| c * k).collect(),
        };
        AffineElement::new(x0, self.root.reflection())
    }
}

/// An element t^{x0}·w of the extended affine Weyl group of GSp_2g.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    x0: Cocharacter,
    w: SignedPermutation,
}

impl AffineElement {
    pub fn new(x0: Cocharacter, w: SignedPermutation) -> Self {
        assert_eq!(x0.genus(), w.genus(), "genus mismatch");
        Self { x0, w }
    }

    pub fn identity(g: usize) -> Self {
        Self {
            x0: Cocharacter::zero(g),
            w: SignedPermutation::identity(g),
        }
    }

    pub fn translation(x0: Cocharacter) -> Self {
        let g = x0.genus();
        Self {
            x0,
            w: SignedPermutation::identity(g),
        }
    }

    /// The length-zero generator of Ω: τ = t^{(0^g 1^g)}·(1 g+1)⋯(g 2g).
    pub fn tau(g: usize) -> Self {
        let mut coords = vec![0i64; 2 * g];
        for c in coords.iter_mut().skip(g) {
            *c = 1;
        }
        let images: Vec<usize> = (1..=g).map(|i| g + i).chain(1..=g).collect();
        Self {
            x0: Cocharacter { coords },
            w: SignedPermutation::new(images).expect("tau is symplectic"),
        }
    }

    pub fn tau_power(g: usize, k: i64) -> Self {
        let step = if k >= 0 {
            Self::tau(g)
        } else {
            Self::tau(g).inverse()
        };
        let mut out = Self::identity(g);
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&step);
        }
        out
    }

    /// The simple affine reflection s_i, 0 ≤ i ≤ g.
    pub fn simple_reflection(g: usize, i: usize) -> Self {
        assert!(i <= g, "simple reflection index {i} out of range 0..={g}");
        if i == 0 {
            // s_0 = t^{(−1, 0^{2g−2}, 1)}·(1 2g)
            let mut coords = vec![0i64; 2 * g];
            coords[0] = -1;
            coords[2 * g - 1] = 1;
            Self {
                x0: Cocharacter { coords },
                w: SignedPermutation::reflection_swap(g, 1, 2 * g),
            }
        } else if i < g {
            Self {
                x0: Cocharacter::zero(g),
                w: SignedPermutation::reflection_swap(g, i, i + 1),
            }
        } else {
            Self {
                x0: Cocharacter::zero(g),
                w: SignedPermutation::reflection_swap(g, g, g + 1),
            }
        }
    }

    pub fn genus(&self) -> usize {
        self.w.genus()
    }

    pub fn x0(&self) -> &Cocharacter {
        &self.x0
    }

    pub fn weyl(&self) -> &SignedPermutation {
        &self.w
    }

    /// t^{a}u · t^{b}v = t^{a + u·b}·(uv).
    pub fn multiply(&self, rhs: &Self) -> Self {
        Self {
            x0: self.x0.add(&self.w.act(&rhs.x0)),
            w: self.w.compose(&rhs.w),
        }
    }

    /// (t^{a}u)⁻¹ = t^{−u⁻¹·a}·u⁻¹.
    pub fn inverse(&self) -> Self {
        let w_inv = self.w.inverse();
        Self {
            x0: w_inv.act(&self.x0).neg(),
            w: w_inv,
        }
    }

    /// The similitude class c = x0(i) + x0(2g+1−i); two elements lie in the
    /// same coset of the affine Weyl group iff their classes agree.
    pub fn similitude_class(&self) -> i64 {
        self.x0.pair_sum()
    }

    /// Image of an arbitrary point of Z^{2g} under the affine map
    /// v ↦ w·v + x0.
    pub fn apply_point(&self, p: &[i64]) -> Vec<i64> {
        let n = 2 * self.genus();
        assert_eq!(p.len(), n, "point has wrong dimension");
        let mut out = vec![0i64; n];
        for i in 1..=n {
            out[self.w.apply(i) - 1] = p[i - 1];
        }
        for (o, c) in out.iter_mut().zip(self.x0.coords()) {
            *o += c;
        }
        out
    }

    /// The extended alcove x·ω, with ω_i = −(e_1 + ⋯ + e_i) as base point.
    pub fn to_alcove(&self) -> ExtendedAlcove {
        let n = 2 * self.genus();
        let mut omega = vec![0i64; n];
        let mut points = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                omega[i - 1] -= 1;
            }
            points.push(self.apply_point(&omega));
        }
        ExtendedAlcove { points }
    }

    /// Reads t^{x0}·w off an alcove. Fails unless the alcove is a G-alcove,
    /// i.e. the translation part has constant pair sums and the induced
    /// permutation is symplectic.
    pub fn from_alcove(alcove: &ExtendedAlcove) -> Result<Self, Error> {
        let x0 = Cocharacter::new(alcove.points[0].clone()).map_err(|_| Error::NotAGAlcove)?;
        let w = SignedPermutation::new(alcove.induced_images()).map_err(|_| Error::NotAGAlcove)?;
        Ok(Self { x0, w })
    }

    /// Iwahori–Matsumoto length: the number of walls separating the alcove
    /// from the base alcove,
    /// Σ_{β: w⁻¹β > 0} |⟨β, x0⟩| + Σ_{β: w⁻¹β < 0} |⟨β, x0⟩ + 1|.
    pub fn im_length(&self) -> usize {
        let g = self.genus();
        let w_inv = self.w.inverse();
        let mut total = 0u64;
        for a in 1..=g {
            for b in a + 1..=2 * g + 1 - a {
                let pairing = self.x0.get(a) - self.x0.get(b);
                let term = if w_inv.apply(a) < w_inv.apply(b) {
                    pairing.unsigned_abs()
                } else {
                    (pairing + 1).unsigned_abs()
                };
                total += term;
            }
        }
        total as usize
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        Self::simple_reflection(self.genus(), i)
            .multiply(self)
            .im_length()
            < self.im_length()
    }

    /// {i : ℓ(s_i·x) < ℓ(x)}; empty iff ℓ(x) = 0.
    pub fn left_descents(&self) -> Vec<usize> {
        let len = self.im_length();
        (0..=self.genus())
            .filter(|&i| {
                Self::simple_reflection(self.genus(), i)
                    .multiply(self)
                    .im_length()
                    < len
            })
            .collect()
    }

    pub fn smallest_left_descent(&self) -> Option<usize> {
        let len = self.im_length();
        (0..=self.genus()).find(|&i| {
            Self::simple_reflection(self.genus(), i)
                .multiply(self)
                .im_length()
                < len
        })
    }

    /// The canonical reduced word x = s_{l₁}⋯s_{l_k}·τ^m, peeling the
    /// smallest left descent at every step; k = ℓ(x) and m is the
    /// similitude class.
    pub fn reduced_word(&self) -> ReducedWord {
        let g = self.genus();
        let mut letters = Vec::new();
        let mut cur = self.clone();
        while let Some(i) = cur.smallest_left_descent() {
            letters.push(i);
            cur = Self::simple_reflection(g, i).multiply(&cur);
        }
        let omega_power = cur.similitude_class();
        debug_assert_eq!(cur, Self::tau_power(g, omega_power));
        ReducedWord {
            genus: g,
            letters,
            omega_power,
        }
    }

    /// Stable identifier "g<g>_x0<entries>_w<entries>".
    pub fn canonical_id(&self) -> String {
        format!(
            "g{}_x0{}_w{}",
            self.genus(),
            self.x0.coords().iter().join(""),
            self.w.one_line().iter().join("_")
        )
    }
}

impl PartialOrd for AffineElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical enumeration order: lexicographic by one-line w, then x0.
impl Ord for AffineElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.genus()
            .cmp(&other.genus())
            .then_with(|| self.w.cmp(&other.w))
            .then_with(|| self.x0.cmp(&other.x0))
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}*{}", self.x0, self.w)
    }
}

/// A word in the simple affine reflections times a power of τ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    pub genus: usize,
    pub letters: Vec<usize>,
    pub omega_power: i64,
}

impl ReducedWord {
    /// Multiplies the word back out.
    pub fn assemble(&self) -> AffineElement {
        let mut out = AffineElement::identity(self.genus);
        for &i in &self.letters {
            out = out.multiply(&AffineElement::simple_reflection(self.genus, i));
        }
        out.multiply(&AffineElement::tau_power(self.genus, self.omega_power))
    }
}

/// An extended alcove: a tuple (x_0, …, x_{2g−1}) of vectors in Z^{2g} with
/// x_i = x_{i−1} − e_{w(i)} for a permutation w, where x_{2g} := x_0 − 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedAlcove {
    points: Vec<Vec<i64>>,
}

impl ExtendedAlcove {
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self, Error> {
        let n = points.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidGenus);
        }
        for p in &points {
            if p.len() != n {
                return Err(Error::NotAnAlcove(format!(
                    "expected {n} coordinates per point, got {}",
                    p.len()
                )));
            }
        }
        let alcove = Self { points };
        alcove.check_steps()?;
        Ok(alcove)
    }

    /// The base alcove ω = (0, −e_1, −e_1−e_2, …).
    pub fn base(g: usize) -> Self {
        let n = 2 * g;
        let mut omega = vec![0i64; n];
        let mut points = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                omega[i - 1] -= 1;
            }
            points.push(omega.clone());
        }
        Self { points }
    }

    pub fn genus(&self) -> usize {
        self.points.len() / 2
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    fn check_steps(&self) -> Result<(), Error> {
        self.induced_images_checked().map(|_| ())
    }

    fn induced_images_checked(&self) -> Result<Vec<usize>, Error> {
        let n = self.points.len();
        let mut images = Vec::with_capacity(n);
        for i in 1..=n {
            let prev = &self.points[i - 1];
            let next_owned;
            let next = if i == n {
                next_owned = self.points[0].iter().map(|c| c - 1).collect::<Vec<_>>();
                &next_owned
            } else {
                &self.points[i]
            };
            let mut drop_at = None;
            for j in 0..n {
                match prev[j] - next[j] {
                    0 => {}
                    1 if drop_at.is_none() => drop_at = Some(j + 1),
                    _ => {
                        return Err(Error::NotAnAlcove(format!(
                            "step {i} is not a unit coordinate drop"
                        )))
                    }
                }
            }
            match drop_at {
                Some(j) => images.push(j),
                None => {
                    return Err(Error::NotAnAlcove(format!(
                        "step {i} is not a unit coordinate drop"
                    )))
                }
            }
        }
        let mut seen = vec![false; n];
        for &j in &images {
            if seen[j - 1] {
                return Err(Error::NotAnAlcove(
                    "coordinate drops do not form a permutation".into(),
                ));
            }
            seen[j - 1] = true;
        }
        Ok(images)
    }

    /// One-line images of the permutation read off the coordinate drops.
    fn induced_images(&self) -> Vec<usize> {
        self.induced_images_checked()
            .expect("validated at construction")
    }

    /// Whether there is a c ∈ Z with x_i + θ(x_{2g−i}) = c·1 for all i,
    /// where θ reverses coordinates and x_{2g} := x_0 − 1.
    pub fn is_g_alcove(&self) -> bool {
        let n = self.points.len();
        let point = |i: usize| -> Vec<i64> {
            if i == n {
                self.points[0].iter().map(|c| c - 1).collect()
            } else {
                self.points[i].clone()
            }
        };
        let mut c = None;
        for i in 0..=n {
            let x = point(i);
            let y = point(n - i);
            for j in 0..n {
                let sum = x[j] + y[n - 1 - j];
                match c {
                    None => c = Some(sum),
                    Some(v) if v != sum => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

/// Whether the alcove of x lies on the same side of the wall of `alpha` as
/// the base alcove, decided exactly at the scaled base point
/// (1, 2, …, 2g)/(2g+1). `Err(OnWall)` if x's alcove lies on the wall.
pub fn same_side_as_base(x: &AffineElement, alpha: &AffineRoot) -> Result<bool, Error> {
    assert_eq!(x.genus(), alpha.root.genus(), "genus mismatch");
    let g = x.genus();
    let denom = 2 * g as i64 + 1;
    let (a, b) = alpha.signed_pair();
    let w_inv = x.weyl().inverse();
    // (2g+1)·(⟨β, w·p0 + x0⟩ − k), using ⟨β, w·p0⟩ = (w⁻¹(a) − w⁻¹(b))/(2g+1).
    let num_x = w_inv.apply(a) as i64 - w_inv.apply(b) as i64
        + denom * (x.x0().get(a) - x.x0().get(b) - alpha.level);
    let num_base = a as i64 - b as i64 - denom * alpha.level;
    debug_assert_ne!(num_base, 0, "the base point is interior to every wall");
    if num_x == 0 {
        return Err(Error::OnWall);
    }
    Ok(num_x.signum() == num_base.signum())
}
