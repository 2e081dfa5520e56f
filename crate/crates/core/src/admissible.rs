//! The μ-admissible set for μ = (1^g 0^g): membership tests, enumeration
//! indexed by (fixed set, sign choices), p-rank and isogeny-kernel kinds,
//! possibly maximal elements and the going-up constructions.

use std::cmp::Ordering;
use std::fmt;

use crate::affine::{AffineElement, Cocharacter, ExtendedAlcove};
use crate::error::Error;
use crate::weyl::{Cycle, SignVector, SignedPermutation, SmallPermutation};

/// μ = (1^g 0^g).
pub fn mu(g: usize) -> Cocharacter {
    let mut coords = vec![0i64; 2 * g];
    for c in coords.iter_mut().take(g) {
        *c = 1;
    }
    Cocharacter::new(coords).expect("mu has constant pair sums")
}

/// The W-orbit of μ: all 2^g vectors in {0,1}^{2g} with every pair sum 1,
/// in lexicographic order.
pub fn weyl_orbit_mu(g: usize) -> Vec<Cocharacter> {
    let mut out: Vec<Cocharacter> = (0..1usize << g)
        .map(|mask| {
            let mut coords = vec![0i64; 2 * g];
            for i in 0..g {
                let bit = ((mask >> i) & 1) as i64;
                coords[i] = bit;
                coords[2 * g - 1 - i] = 1 - bit;
            }
            Cocharacter::new(coords).expect("pair sums are 1")
        })
        .collect();
    out.sort();
    out
}

/// μ-admissibility by the coordinate criterion: the size condition
/// {x0(i), x0(2g+1−i)} = {0,1}, together with x0(i) = 0 whenever
/// w⁻¹(i) > i and x0(i) = 1 whenever w⁻¹(i) < i.
pub fn is_mu_admissible(x: &AffineElement) -> bool {
    violated_criterion(x).is_none()
}

/// The isogeny-kernel classification violated by `x`, if any; used by the
/// CLI to explain inadmissible elements.
pub fn violated_criterion(x: &AffineElement) -> Option<String> {
    let g = x.genus();
    let n = 2 * g;
    for i in 1..=g {
        let (lo, hi) = (
            x.x0().get(i).min(x.x0().get(n + 1 - i)),
            x.x0().get(i).max(x.x0().get(n + 1 - i)),
        );
        if (lo, hi) != (0, 1) {
            return Some(format!(
                "size condition fails: {{x0({i}), x0({})}} must be {{0,1}}",
                n + 1 - i
            ));
        }
    }
    let w_inv = x.weyl().inverse();
    for i in 1..=n {
        let pre = w_inv.apply(i);
        if pre > i && x.x0().get(i) != 0 {
            return Some(format!("x0({i}) must be 0 since w^-1({i}) > {i}"));
        }
        if pre < i && x.x0().get(i) != 1 {
            return Some(format!("x0({i}) must be 1 since w^-1({i}) < {i}"));
        }
    }
    None
}

/// Minuscule-of-size-g test on an alcove: ω_i ≤ x_i ≤ ω_i + 1 for all i
/// and {x_0(i), x_0(2g+1−i)} = {0,1}. Errors on a non-G-alcove.
pub fn is_minuscule_size_g(alcove: &ExtendedAlcove) -> Result<bool, Error> {
    if !alcove.is_g_alcove() {
        return Err(Error::NotAGAlcove);
    }
    let g = alcove.genus();
    let n = 2 * g;
    let base = ExtendedAlcove::base(g);
    for (x, omega) in alcove.points().iter().zip(base.points()) {
        for j in 0..n {
            if x[j] < omega[j] || x[j] > omega[j] + 1 {
                return Ok(false);
            }
        }
    }
    let x0 = &alcove.points()[0];
    for i in 0..g {
        let (lo, hi) = (x0[i].min(x0[n - 1 - i]), x0[i].max(x0[n - 1 - i]));
        if (lo, hi) != (0, 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One of the three finite group schemes of order p classifying the kernel
/// of the i-th isogeny along the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    MuP,
    ZModP,
    AlphaP,
}

impl KernelKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            KernelKind::MuP => "mu_p",
            KernelKind::ZModP => "Z/p",
            KernelKind::AlphaP => "alpha_p",
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A μ-admissible element with its derived data computed once at
/// construction: (u, σ)-decomposition, fixed points, cycles, p-rank,
/// length and the possibly-maximal flag.
#[derive(Debug, Clone)]
pub struct AdmissibleElement {
    elem: AffineElement,
    u: SignVector,
    sigma: SmallPermutation,
    fixed: Vec<usize>,
    cycles: Vec<Cycle>,
    prank: usize,
    length: usize,
    possibly_maximal: bool,
}

impl PartialEq for AdmissibleElement {
    fn eq(&self, other: &Self) -> bool {
        self.elem == other.elem
    }
}

impl Eq for AdmissibleElement {}

impl std::hash::Hash for AdmissibleElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elem.hash(state);
    }
}

impl PartialOrd for AdmissibleElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AdmissibleElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elem.cmp(&other.elem)
    }
}

impl fmt::Display for AdmissibleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elem.fmt(f)
    }
}

impl AdmissibleElement {
    /// Validates admissibility and caches the derived fields.
    pub fn new(elem: AffineElement) -> Result<Self, Error> {
        if !is_mu_admissible(&elem) {
            return Err(Error::NotAdmissible);
        }
        let (u, sigma) = elem.weyl().parts();
        let fixed = elem.weyl().fixed_points();
        let cycles = elem.weyl().cycles();
        let prank = fixed.len();
        let length = elem.im_length();
        let possibly_maximal = (1..=elem.genus()).all(|i| u.bit(i) == 0 || sigma.apply(i) == i);
        Ok(Self {
            elem,
            u,
            sigma,
            fixed,
            cycles,
            prank,
            length,
            possibly_maximal,
        })
    }

    pub fn element(&self) -> &AffineElement {
        &self.elem
    }

    pub fn genus(&self) -> usize {
        self.elem.genus()
    }

    pub fn x0(&self) -> &Cocharacter {
        self.elem.x0()
    }

    pub fn weyl(&self) -> &SignedPermutation {
        self.elem.weyl()
    }

    pub fn sign_vector(&self) -> &SignVector {
        &self.u
    }

    pub fn small_permutation(&self) -> &SmallPermutation {
        &self.sigma
    }

    /// F(x) = fixed points of the W-component below g, sorted.
    pub fn fixed_points(&self) -> &[usize] {
        &self.fixed
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// p-rank = |F(x)|.
    pub fn p_rank(&self) -> usize {
        self.prank
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// u(i) = 1 only at σ-fixed coordinates.
    pub fn is_possibly_maximal(&self) -> bool {
        self.possibly_maximal
    }

    pub fn canonical_id(&self) -> String {
        self.elem.canonical_id()
    }

    /// The sign choices v ∈ {0,1}^d read off x0 at the sorted fixed set.
    pub fn v_at_fixed(&self) -> Vec<u8> {
        self.fixed.iter().map(|&f| self.x0().get(f) as u8).collect()
    }

    /// Kernel kind of the i-th isogeny, 1 ≤ i ≤ 2g: μ_p when w(i) = i and
    /// x0(i) = 1, Z/p when w(i) = i and x0(i) = 0, α_p when w(i) ≠ i.
    pub fn kernel_type(&self, i: usize) -> KernelKind {
        assert!(i >= 1 && i <= 2 * self.genus(), "index {i} out of range");
        if self.weyl().apply(i) != i {
            KernelKind::AlphaP
        } else if self.x0().get(i) == 1 {
            KernelKind::MuP
        } else {
            KernelKind::ZModP
        }
    }

    pub fn kernel_types(&self) -> Vec<KernelKind> {
        (1..=2 * self.genus())
            .map(|i| self.kernel_type(i))
            .collect()
    }

    /// The Bruhat-maximal element of the (F, v, σ)-class of `self`: the
    /// sign vector is zeroed outside σ-fixed coordinates and x0 is rebuilt
    /// with x0(i) = 1 exactly when σ⁻¹(i) ≺ i. Idempotent; preserves F,
    /// cycles, σ and p-rank, and dominates `self` in the Bruhat order.
    pub fn possibly_maximal_cover(&self) -> AdmissibleElement {
        let g = self.genus();
        let ctx = FixedContext::of(self);
        let bits = (1..=g)
            .map(|i| u8::from(ctx.approx(self.sigma.apply(i), i)))
            .collect::<Vec<_>>();
        let u = SignVector::new(bits).expect("bits are 0/1");
        let w = SignedPermutation::from_parts(&u, &self.sigma);
        let sigma_inv = self.sigma.inverse();
        let mut coords = vec![0i64; 2 * g];
        for i in 1..=g {
            let value = i64::from(ctx.prec(sigma_inv.apply(i), i));
            coords[i - 1] = value;
            coords[2 * g - i] = 1 - value;
        }
        let x0 = Cocharacter::new(coords).expect("pair sums are 1");
        AdmissibleElement::new(AffineElement::new(x0, w))
            .expect("the maximal representative of an admissible class is admissible")
    }

    /// Going up in p-rank along a cycle Z of a possibly maximal element:
    /// an order-1 cycle is resolved by the sign flip at its entry
    /// (p-rank +1), an order-2 cycle by the transposition of its entries
    /// (p-rank +2), and a longer cycle by a transposition at its smallest
    /// local minimum c_k with c_{k−1} > c_k < c_{k+1}, multiplied on the
    /// left by (c_k c_{k+1}) if c_{k−1} > c_{k+1} and on the right by
    /// (c_k c_{k−1}) otherwise (p-rank +1). The result is again possibly
    /// maximal and dominates `self`.
    pub fn going_up(&self, z: &Cycle) -> Result<AdmissibleElement, Error> {
        if !self.possibly_maximal {
            return Err(Error::NotPossiblyMaximal);
        }
        if !self.cycles.contains(z) {
            return Err(Error::NotACycle {
                cycle: z.to_string(),
            });
        }
        let g = self.genus();
        let elems = z.elements();
        let product = match elems.len() {
            1 => {
                let s = AffineElement::new(
                    Cocharacter::zero(g),
                    SignedPermutation::sign_flip(g, elems[0]),
                );
                s.multiply(self.element())
            }
            2 => {
                let s = AffineElement::new(
                    Cocharacter::zero(g),
                    SignedPermutation::reflection_swap(g, elems[0], elems[1]),
                );
                s.multiply(self.element())
            }
            l => {
                // The smallest local minimum is the cycle's least entry,
                // which sits first in canonical rotation.
                let (prev, cur, next) = (elems[l - 1], elems[0], elems[1]);
                debug_assert!(prev > cur && cur < next && prev != next);
                if prev > next {
                    let s = AffineElement::new(
                        Cocharacter::zero(g),
                        SignedPermutation::reflection_swap(g, cur, next),
                    );
                    s.multiply(self.element())
                } else {
                    let s = AffineElement::new(
                        Cocharacter::zero(g),
                        SignedPermutation::reflection_swap(g, cur, prev),
                    );
                    self.element().multiply(&s)
                }
            }
        };
        let up = AdmissibleElement::new(product)
            .expect("going up along a cycle preserves admissibility");
        debug_assert!(up.is_possibly_maximal());
        Ok(up)
    }
}

/// The three-valued coordinate comparison attached to a fixed set F and
/// sign choices v: i ≺ j when i < j, or i = j is the k-th fixed point and
/// v(k) = 1; i ≈ j when i = j ∉ F.
pub(crate) struct FixedContext {
    fixed: Vec<usize>,
    v: Vec<u8>,
}

impl FixedContext {
    pub(crate) fn of(x: &AdmissibleElement) -> Self {
        Self {
            fixed: x.fixed.clone(),
            v: x.v_at_fixed(),
        }
    }

    pub(crate) fn is_fixed(&self, i: usize) -> bool {
        self.fixed.binary_search(&i).is_ok()
    }

    fn v_at(&self, i: usize) -> Option<u8> {
        self.fixed.binary_search(&i).ok().map(|k| self.v[k])
    }

    /// i ≺ j
    pub(crate) fn prec(&self, i: usize, j: usize) -> bool {
        i < j || (i == j && self.v_at(i) == Some(1))
    }

    /// i ≈ j
    pub(crate) fn approx(&self, i: usize, j: usize) -> bool {
        i == j && !self.is_fixed(i)
    }
}

/// Restriction of the enumeration: by p-rank, by exact fixed set, and by
/// the sign choices v at that fixed set.
#[derive(Debug, Clone, Default)]
pub struct AdmFilter {
    pub prank: Option<usize>,
    pub fixed: Option<Vec<usize>>,
    pub v: Option<Vec<u8>>,
}

impl AdmFilter {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn by_prank(d: usize) -> Self {
        Self {
            prank: Some(d),
            ..Self::default()
        }
    }

    fn validate(&self, g: usize) -> Result<(), Error> {
        if let Some(d) = self.prank {
            if d > g {
                return Err(Error::PrankOutOfRange { d, g });
            }
        }
        if let Some(fixed) = &self.fixed {
            let mut sorted = fixed.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != fixed.len() || fixed.iter().any(|&f| f == 0 || f > g) {
                return Err(Error::InvalidFilter(format!(
                    "fixed set must be a subset of 1..={g} without repeats"
                )));
            }
            if let Some(d) = self.prank {
                if d != fixed.len() {
                    return Err(Error::InvalidFilter(
                        "p-rank and fixed-set size disagree".into(),
                    ));
                }
            }
        }
        match (&self.v, &self.fixed) {
            (Some(_), None) => {
                return Err(Error::InvalidFilter(
                    "sign choices require a fixed set".into(),
                ))
            }
            (Some(v), Some(fixed)) => {
                if v.len() != fixed.len() {
                    return Err(Error::InvalidFilter(
                        "sign choices and fixed set have different sizes".into(),
                    ));
                }
                if v.iter().any(|&b| b > 1) {
                    return Err(Error::InvalidFilter("sign choices must be 0 or 1".into()));
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn admits(&self, x: &AdmissibleElement) -> bool {
        if let Some(d) = self.prank {
            if x.p_rank() != d {
                return false;
            }
        }
        if let Some(fixed) = &self.fixed {
            let mut sorted = fixed.clone();
            sorted.sort_unstable();
            if x.fixed_points() != sorted {
                return false;
            }
        }
        if let Some(v) = &self.v {
            if &x.v_at_fixed() != v {
                return false;
            }
        }
        true
    }
}

/// Enumerates the μ-admissible set of genus g in canonical order
/// (lexicographic by one-line w, then x0). For every w ∈ W the non-fixed
/// coordinates of x0 are forced by the admissibility criterion and each
/// fixed pair (f, 2g+1−f) contributes a free choice x0(f) ∈ {0,1}.
pub fn enumerate_adm(g: usize, filter: &AdmFilter) -> Result<Vec<AdmissibleElement>, Error> {
    if g == 0 {
        return Err(Error::InvalidGenus);
    }
    filter.validate(g)?;
    let n = 2 * g;
    let mut out = Vec::new();
    for sigma in SmallPermutation::all(g) {
        for u in SignVector::all(g) {
            let w = SignedPermutation::from_parts(&u, &sigma);
            let fixed = w.fixed_points();
            if let Some(d) = filter.prank {
                if fixed.len() != d {
                    continue;
                }
            }
            let w_inv = w.inverse();
            for mask in 0..1usize << fixed.len() {
                let mut coords = vec![0i64; n];
                for i in 1..=n {
                    let pre = w_inv.apply(i);
                    coords[i - 1] = match pre.cmp(&i) {
                        Ordering::Greater => 0,
                        Ordering::Less => 1,
                        Ordering::Equal => {
                            if i <= g {
                                let k = fixed.binary_search(&i).expect("fixed point");
                                ((mask >> k) & 1) as i64
                            } else {
                                let k = fixed.binary_search(&(n + 1 - i)).expect("fixed point");
                                1 - ((mask >> k) & 1) as i64
                            }
                        }
                    };
                }
                let x0 = Cocharacter::new(coords).expect("pair sums are 1");
                let elem = AdmissibleElement::new(AffineElement::new(x0, w.clone()))
                    .expect("criterion construction is admissible");
                if filter.admits(&elem) {
                    out.push(elem);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Brute-force count of minuscule G-alcoves of size g by the original
/// inequality ω ≤ x ≤ ω + 1, scanning all w ∈ W and all 2^g translation
/// parts allowed by the size condition. Independent of the coordinate
/// criterion; used to validate the enumeration.
pub fn minuscule_alcove_scan(g: usize) -> Vec<AffineElement> {
    let mut out = Vec::new();
    for w in SignedPermutation::all(g) {
        for x0 in weyl_orbit_mu(g) {
            let x = AffineElement::new(x0, w.clone());
            if is_minuscule_size_g(&x.to_alcove()).expect("G-alcove by construction") {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coch(coords: &[i64]) -> Cocharacter {
        Cocharacter::new(coords.to_vec()).unwrap()
    }

    fn sp(images: &[usize]) -> SignedPermutation {
        SignedPermutation::new(images.to_vec()).unwrap()
    }

    fn adm(x0: &[i64], w: &[usize]) -> AdmissibleElement {
        AdmissibleElement::new(AffineElement::new(coch(x0), sp(w))).unwrap()
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(1), coch(&[1, 0]));
        assert_eq!(mu(2), coch(&[1, 1, 0, 0]));
        assert_eq!(weyl_orbit_mu(3).len(), 8);
    }

    #[test]
    fn orbit_vectors_are_weyl_conjugates_of_mu() {
        for g in 1..=3 {
            let group = SignedPermutation::all(g);
            for v in weyl_orbit_mu(g) {
                assert!(
                    group.iter().any(|w| w.act(&mu(g)) == v),
                    "{v} not in the orbit of mu"
                );
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_mu_admissible(&AffineElement::tau(1)));
        assert!(is_mu_admissible(&AffineElement::tau(3)));
        for x0 in weyl_orbit_mu(2) {
            assert!(is_mu_admissible(&AffineElement::translation(x0)));
        }
        let bad = AffineElement::new(coch(&[1, 0]), sp(&[2, 1]));
        assert!(!is_mu_admissible(&bad));
        assert!(violated_criterion(&bad)
            .unwrap()
            .contains("x0(1) must be 0"));
        assert!(!is_mu_admissible(&AffineElement::identity(2)));
    }

    #[test]
    fn minuscule_examples() {
        assert_eq!(
            is_minuscule_size_g(&AffineElement::tau(2).to_alcove()),
            Ok(true)
        );
        assert_eq!(is_minuscule_size_g(&ExtendedAlcove::base(2)), Ok(false));
        let two_mu = AffineElement::translation(coch(&[2, 2, 0, 0]));
        assert_eq!(is_minuscule_size_g(&two_mu.to_alcove()), Ok(false));
    }

    #[test]
    fn minuscule_rejects_non_g_alcove() {
        // Non-symplectic genus-2 example: alcove of t^0·(1 2) in GL_4.
        let points = vec![
            vec![0, 0, 0, 0],
            vec![0, -1, 0, 0],
            vec![-1, -1, 0, 0],
            vec![-1, -1, -1, 0],
        ];
        let alcove = ExtendedAlcove::new(points).unwrap();
        assert!(!alcove.is_g_alcove());
        assert_eq!(is_minuscule_size_g(&alcove), Err(Error::NotAGAlcove));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_adm(1, &AdmFilter::none()).unwrap().len(), 3);
        assert_eq!(enumerate_adm(2, &AdmFilter::none()).unwrap().len(), 13);
        assert_eq!(enumerate_adm(3, &AdmFilter::none()).unwrap().len(), 79);
    }

    #[test]
    fn enumeration_genus_one() {
        let all = enumerate_adm(1, &AdmFilter::none()).unwrap();
        let mut lengths: Vec<usize> = all.iter().map(|x| x.length()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![0, 1, 1]);
        assert!(all.contains(&adm(&[0, 1], &[2, 1])));
        assert!(all.contains(&adm(&[1, 0], &[1, 2])));
        assert!(all.contains(&adm(&[0, 1], &[1, 2])));
    }

    #[test]
    fn enumeration_matches_brute_force_scan() {
        for g in 1..=3 {
            let enumerated: Vec<_> = enumerate_adm(g, &AdmFilter::none())
                .unwrap()
                .into_iter()
                .map(|x| x.element().clone())
                .collect();
            assert_eq!(enumerated, minuscule_alcove_scan(g));
        }
    }

    #[test]
    fn filters() {
        let rank1 = enumerate_adm(2, &AdmFilter::by_prank(1)).unwrap();
        assert_eq!(rank1.len(), 4);
        assert!(rank1.iter().all(|x| x.p_rank() == 1));

        // F = {1} pins w = [1,3,2,4]; only the sign choice at 1 is free.
        let by_fixed = enumerate_adm(
            2,
            &AdmFilter {
                prank: None,
                fixed: Some(vec![1]),
                v: None,
            },
        )
        .unwrap();
        assert!(by_fixed.iter().all(|x| x.fixed_points() == [1]));
        assert_eq!(by_fixed.len(), 2);

        let by_v = enumerate_adm(
            2,
            &AdmFilter {
                prank: None,
                fixed: Some(vec![1]),
                v: Some(vec![1]),
            },
        )
        .unwrap();
        assert_eq!(by_v.len(), 1);
        assert!(by_v.iter().all(|x| x.x0().get(1) == 1));
    }

    #[test]
    fn filter_validation() {
        assert!(matches!(
            enumerate_adm(2, &AdmFilter::by_prank(3)),
            Err(Error::PrankOutOfRange { d: 3, g: 2 })
        ));
        assert!(matches!(
            enumerate_adm(
                2,
                &AdmFilter {
                    prank: None,
                    fixed: Some(vec![0]),
                    v: None
                }
            ),
            Err(Error::InvalidFilter(_))
        ));
        assert!(matches!(
            enumerate_adm(
                2,
                &AdmFilter {
                    prank: None,
                    fixed: None,
                    v: Some(vec![1])
                }
            ),
            Err(Error::InvalidFilter(_))
        ));
        assert!(matches!(
            enumerate_adm(0, &AdmFilter::none()),
            Err(Error::InvalidGenus)
        ));
    }

    #[test]
    fn prank_examples() {
        for x0 in weyl_orbit_mu(2) {
            let x = AdmissibleElement::new(AffineElement::translation(x0)).unwrap();
            assert_eq!(x.p_rank(), 2);
        }
        let tau = AdmissibleElement::new(AffineElement::tau(2)).unwrap();
        assert_eq!(tau.p_rank(), 0);
        // g = 2, w = s_g with forced x0: fixed point 1 only.
        let x = adm(&[1, 0, 1, 0], &[1, 3, 2, 4]);
        assert_eq!(x.p_rank(), 1);
        assert_eq!(x.fixed_points(), [1]);
    }

    #[test]
    fn kernel_examples() {
        let x = adm(&[1, 0], &[1, 2]);
        assert_eq!(x.kernel_type(1), KernelKind::MuP);
        assert_eq!(x.kernel_type(2), KernelKind::ZModP);
        let tau = AdmissibleElement::new(AffineElement::tau(1)).unwrap();
        assert_eq!(tau.kernel_type(1), KernelKind::AlphaP);
        assert_eq!(tau.kernel_type(2), KernelKind::AlphaP);
    }

    #[test]
    fn kernel_duality() {
        for x in enumerate_adm(3, &AdmFilter::none()).unwrap() {
            let kinds = x.kernel_types();
            let mus = kinds.iter().filter(|k| **k == KernelKind::MuP).count();
            let etales = kinds.iter().filter(|k| **k == KernelKind::ZModP).count();
            assert_eq!(mus, etales);
            assert_eq!(x.p_rank(), (mus + etales) / 2);
        }
    }

    #[test]
    fn possibly_maximal_examples() {
        for x0 in weyl_orbit_mu(2) {
            let x = AdmissibleElement::new(AffineElement::translation(x0)).unwrap();
            assert!(x.is_possibly_maximal());
        }
        // τ of genus 1 has u = (1), σ = id; for genus ≥ 2 the sign bits of
        // τ sit on moved coordinates (σ is the reversal), so τ is the
        // minimal element of its class, not the maximal one.
        let tau1 = AdmissibleElement::new(AffineElement::tau(1)).unwrap();
        assert!(tau1.is_possibly_maximal());
        let tau2 = AdmissibleElement::new(AffineElement::tau(2)).unwrap();
        assert_eq!(tau2.sign_vector().bits(), &[1, 1]);
        assert_eq!(tau2.small_permutation().one_line(), &[2, 1]);
        assert!(!tau2.is_possibly_maximal());
        // u = (1, 0), σ = (1 2): u(1) = 1 but σ(1) ≠ 1.
        let x = adm(&[0, 0, 1, 1], &[3, 1, 4, 2]);
        assert!(!x.is_possibly_maximal());
    }

    #[test]
    fn cover_examples() {
        let tau1 = AdmissibleElement::new(AffineElement::tau(1)).unwrap();
        assert_eq!(tau1.possibly_maximal_cover(), tau1);

        let x = adm(&[0, 0, 1, 1], &[3, 1, 4, 2]);
        let cover = x.possibly_maximal_cover();
        assert_eq!(cover, adm(&[0, 1, 0, 1], &[2, 1, 4, 3]));
        assert_eq!(cover.p_rank(), x.p_rank());
        assert_eq!(cover.cycles(), x.cycles());
        assert_eq!(cover.small_permutation(), x.small_permutation());

        // τ of genus 2 shares (F, v, σ) with x above and has the same cover.
        let tau2 = AdmissibleElement::new(AffineElement::tau(2)).unwrap();
        assert_eq!(tau2.possibly_maximal_cover(), cover);
    }

    #[test]
    fn cover_is_idempotent_and_preserving() {
        for g in 1..=3 {
            for x in enumerate_adm(g, &AdmFilter::none()).unwrap() {
                let y = x.possibly_maximal_cover();
                assert!(y.is_possibly_maximal());
                assert_eq!(y.possibly_maximal_cover(), y);
                assert_eq!(y.p_rank(), x.p_rank());
                assert_eq!(y.fixed_points(), x.fixed_points());
                assert_eq!(y.cycles(), x.cycles());
                assert_eq!(y.small_permutation(), x.small_permutation());
                assert_eq!(y.v_at_fixed(), x.v_at_fixed());
                if x.is_possibly_maximal() {
                    assert_eq!(y, x);
                }
            }
        }
    }

    #[test]
    fn going_up_order_one() {
        let tau = AdmissibleElement::new(AffineElement::tau(1)).unwrap();
        let z = tau.cycles()[0].clone();
        assert_eq!(z.order(), 1);
        let y = tau.going_up(&z).unwrap();
        assert_eq!(y.p_rank(), 1);
        assert_eq!(y, adm(&[1, 0], &[1, 2]));
        assert!(y.cycles().is_empty());
    }

    #[test]
    fn going_up_order_two() {
        let x = adm(&[0, 1, 0, 1], &[2, 1, 4, 3]);
        let z = x.cycles()[0].clone();
        assert_eq!(z.order(), 2);
        let y = x.going_up(&z).unwrap();
        assert_eq!(y.p_rank(), x.p_rank() + 2);
        assert!(y.weyl().is_identity());
    }

    #[test]
    fn going_up_order_three() {
        // g = 3, σ = (1 3 2), u = 0, possibly maximal with forced x0.
        let sigma = SmallPermutation::from_cycles(3, &[&[1, 3, 2]]).unwrap();
        let w = SignedPermutation::from_parts(&SignVector::zeros(3), &sigma);
        let x = enumerate_adm(3, &AdmFilter::none())
            .unwrap()
            .into_iter()
            .find(|x| x.weyl() == &w)
            .unwrap();
        assert!(x.is_possibly_maximal());
        let z = x.cycles()[0].clone();
        assert_eq!(z.order(), 3);
        let y = x.going_up(&z).unwrap();
        assert_eq!(y.p_rank(), x.p_rank() + 1);
        assert_eq!(y.cycles().len(), 1);
        assert_eq!(y.cycles()[0].order(), 2);
    }

    #[test]
    fn going_up_rejects_bad_inputs() {
        let x = adm(&[0, 0, 1, 1], &[3, 1, 4, 2]);
        assert!(!x.is_possibly_maximal());
        let z = x.cycles()[0].clone();
        assert_eq!(x.going_up(&z), Err(Error::NotPossiblyMaximal));

        let tau = AdmissibleElement::new(AffineElement::tau(1)).unwrap();
        let alien = Cycle::new(vec![1, 2]);
        assert!(matches!(tau.going_up(&alien), Err(Error::NotACycle { .. })));
    }

    #[test]
    fn admissible_elements_live_in_the_tau_coset() {
        for g in 1..=3 {
            for x in enumerate_adm(g, &AdmFilter::none()).unwrap() {
                assert_eq!(x.element().similitude_class(), 1);
                assert_eq!(x.element().reduced_word().omega_power, 1);
            }
        }
    }
}
