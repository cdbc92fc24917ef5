//! Real-coefficient linear combinations of phase-free Pauli labels.
//!
//! A [`PauliExpansion`] represents the Hermitian operator M = Σ_E c_E · E
//! with real coefficients c_E. Two coefficient regimes share one generic
//! type: exact rationals ([`Exact`], for transcribed objects whose
//! identities must verify exactly) and f64 (for numerical search
//! iterates).
//!
//! Products are computed in coefficient space by the Pauli convolution.
//! The square of a real expansion is again real: anticommuting label
//! pairs contribute ±i terms that cancel pairwise, so they are skipped
//! outright. General products land in [`ComplexExpansion`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::pauli::{PauliLabel, PauliString};

/// Exact coefficient type for transcribed operators.
pub type Exact = BigRational;

/// Coefficient arithmetic needed by the expansion layer.
///
/// Implemented for [`Exact`] (exact rationals) and `f64`; `within(0.0)`
/// means exact zero, so tolerance-0 checks stay meaningful in both modes.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + 'static {
    fn zero() -> Self;
    fn one() -> Self {
        Self::from_ratio(1, 1)
    }
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// |self| ≤ tol, with tol = 0 meaning exactly zero.
    fn within(&self, tol: f64) -> bool {
        if tol == 0.0 {
            self.is_zero()
        } else {
            self.to_f64().abs() <= tol
        }
    }
}

impl Coefficient for f64 {
    fn zero() -> f64 {
        0.0
    }
    fn from_ratio(num: i64, den: i64) -> f64 {
        num as f64 / den as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &f64) -> f64 {
        self + rhs
    }
    fn sub(&self, rhs: &f64) -> f64 {
        self - rhs
    }
    fn mul(&self, rhs: &f64) -> f64 {
        self * rhs
    }
    fn neg(&self) -> f64 {
        -self
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Coefficient for Exact {
    fn zero() -> Exact {
        <BigRational as Zero>::zero()
    }
    fn from_ratio(num: i64, den: i64) -> Exact {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Exact) -> Exact {
        self + rhs
    }
    fn sub(&self, rhs: &Exact) -> Exact {
        self - rhs
    }
    fn mul(&self, rhs: &Exact) -> Exact {
        self * rhs
    }
    fn neg(&self) -> Exact {
        -self
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // fall back through a reduced float ratio for huge operands
            self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
        })
    }
}

/// Hermitian operator as a real combination of phase-free Pauli labels.
///
/// Zero coefficients are never stored, so `==` is coefficient-for-
/// coefficient equality.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliExpansion<C: Coefficient> {
    n: usize,
    terms: BTreeMap<PauliLabel, C>,
}

pub type ExactExpansion = PauliExpansion<Exact>;
pub type FloatExpansion = PauliExpansion<f64>;

impl<C: Coefficient> PauliExpansion<C> {
    pub fn new(n: usize) -> Self {
        PauliExpansion {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The identity operator (coefficient 1 on the identity label).
    pub fn identity(n: usize) -> Self {
        let mut e = Self::new(n);
        e.set(PauliLabel::IDENTITY, C::one());
        e
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliLabel, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, label: PauliLabel) -> C {
        self.terms.get(&label).cloned().unwrap_or_else(C::zero)
    }

    /// Sets a coefficient, removing the entry if it is zero.
    pub fn set(&mut self, label: PauliLabel, c: C) {
        if c.is_zero() {
            self.terms.remove(&label);
        } else {
            self.terms.insert(label, c);
        }
    }

    /// Accumulates into a coefficient.
    pub fn add_term(&mut self, label: PauliLabel, c: &C) {
        let sum = self.coefficient(label).add(c);
        self.set(label, sum);
    }

    /// Trace = 2ⁿ · (identity coefficient).
    pub fn trace(&self) -> C {
        pow2::<C>(self.n).mul(&self.coefficient(PauliLabel::IDENTITY))
    }

    pub fn scaled(&self, factor: &C) -> Self {
        let mut out = Self::new(self.n);
        for (l, c) in &self.terms {
            out.set(*l, c.mul(factor));
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::QubitCountMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(*l, c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::QubitCountMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(*l, &c.neg());
        }
        Ok(out)
    }

    /// Squared Frobenius norm: ‖M‖²_F = Tr M†M = 2ⁿ Σ c².
    pub fn frobenius_norm_sq(&self) -> C {
        let mut sum = C::zero();
        for c in self.terms.values() {
            sum = sum.add(&c.mul(c));
        }
        pow2::<C>(self.n).mul(&sum)
    }

    /// M², via the Pauli convolution. Anticommuting pairs cancel exactly
    /// and are skipped; commuting pairs contribute a ±1 sign.
    pub fn square(&self) -> Self {
        let items: Vec<(&PauliLabel, &C)> = self.terms.iter().collect();
        let mut out = Self::new(self.n);
        for (i, (la, ca)) in items.iter().enumerate() {
            // diagonal: E·E = I
            out.add_term(PauliLabel::IDENTITY, &ca.mul(ca));
            for (lb, cb) in items.iter().skip(i + 1) {
                if !la.commutes(**lb) {
                    continue;
                }
                // commuting pair: E·F = F·E = ±G, contributing twice
                let phase = la.mul_phase(**lb);
                debug_assert!(phase % 2 == 0);
                let prod = ca.mul(cb);
                let prod = prod.add(&prod);
                let signed = if phase == 2 { prod.neg() } else { prod };
                out.add_term(la.xor(**lb), &signed);
            }
        }
        out
    }

    /// g · M · g† for a signed Pauli string g: flips the sign of every
    /// term that anticommutes with g.
    pub fn conjugated_by(&self, g: &PauliString) -> Result<Self> {
        if self.n != g.qubits() {
            return Err(Error::QubitCountMismatch(self.n, g.qubits()));
        }
        let mut out = Self::new(self.n);
        for (l, c) in &self.terms {
            if l.commutes(g.label()) {
                out.set(*l, c.clone());
            } else {
                out.set(*l, c.neg());
            }
        }
        Ok(out)
    }

    /// Per-weight-class sums Σ c², indexed by weight 0..=n.
    pub fn weight_masses(&self) -> Vec<C> {
        let mut masses = vec![C::zero(); self.n + 1];
        for (l, c) in &self.terms {
            let w = l.weight();
            masses[w] = masses[w].add(&c.mul(c));
        }
        masses
    }

    /// True iff every label with an odd number of Y letters is absent,
    /// i.e. the dense realization is a real matrix.
    pub fn is_real_matrix(&self) -> bool {
        self.terms.keys().all(|l| l.y_count() % 2 == 0)
    }

    pub fn to_float(&self) -> FloatExpansion {
        let mut out = FloatExpansion::new(self.n);
        for (l, c) in &self.terms {
            out.set(*l, c.to_f64());
        }
        out
    }

    /// Drops terms with |c| ≤ tol.
    pub fn pruned(&self, tol: f64) -> Self {
        let mut out = Self::new(self.n);
        for (l, c) in &self.terms {
            if !c.within(tol) {
                out.set(*l, c.clone());
            }
        }
        out
    }

    /// ‖self − rhs‖_F ≤ tol, exact when tol = 0.
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        match self.sub(rhs) {
            Ok(diff) => diff.frobenius_norm_sq().within(tol * tol),
            Err(_) => false,
        }
    }

    /// General product; the result has complex coefficients.
    pub fn mul(&self, rhs: &Self) -> Result<ComplexExpansion<C>> {
        ComplexExpansion::from_real(self).mul(&ComplexExpansion::from_real(rhs))
    }
}

/// 2ⁿ as a coefficient.
pub fn pow2<C: Coefficient>(n: usize) -> C {
    assert!(n < 63);
    C::from_ratio(1i64 << n, 1)
}

/// Complex-coefficient combination of phase-free labels; coefficients are
/// (re, im) pairs over C. Arises from products of Hermitian expansions.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexExpansion<C: Coefficient> {
    n: usize,
    terms: BTreeMap<PauliLabel, (C, C)>,
}

impl<C: Coefficient> ComplexExpansion<C> {
    pub fn new(n: usize) -> Self {
        ComplexExpansion {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_real(real: &PauliExpansion<C>) -> Self {
        let mut out = Self::new(real.qubits());
        for (l, c) in real.terms() {
            out.terms.insert(*l, (c.clone(), C::zero()));
        }
        out
    }

    /// A single signed Pauli string iᵖ·E as a one-term expansion.
    pub fn from_string(s: &PauliString) -> Self {
        let mut out = Self::new(s.qubits());
        let coeff = match s.phase() {
            0 => (C::one(), C::zero()),
            1 => (C::zero(), C::one()),
            2 => (C::one().neg(), C::zero()),
            _ => (C::zero(), C::one().neg()),
        };
        out.terms.insert(s.label(), coeff);
        out
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliLabel, &(C, C))> {
        self.terms.iter()
    }

    pub fn coefficient(&self, label: PauliLabel) -> (C, C) {
        self.terms
            .get(&label)
            .cloned()
            .unwrap_or((C::zero(), C::zero()))
    }

    fn add_term(&mut self, label: PauliLabel, re: &C, im: &C) {
        let (r0, i0) = self.coefficient(label);
        let r = r0.add(re);
        let i = i0.add(im);
        if r.is_zero() && i.is_zero() {
            self.terms.remove(&label);
        } else {
            self.terms.insert(label, (r, i));
        }
    }

    /// Complex trace as (re, im) = 2ⁿ · identity coefficient.
    pub fn trace(&self) -> (C, C) {
        let (re, im) = self.coefficient(PauliLabel::IDENTITY);
        let p = pow2::<C>(self.n);
        (p.mul(&re), p.mul(&im))
    }

    /// ‖A‖²_F = 2ⁿ Σ (re² + im²).
    pub fn frobenius_norm_sq(&self) -> C {
        let mut sum = C::zero();
        for (re, im) in self.terms.values() {
            sum = sum.add(&re.mul(re)).add(&im.mul(im));
        }
        pow2::<C>(self.n).mul(&sum)
    }

    /// i^phase · self.
    pub fn rotated(&self, phase: u8) -> ComplexExpansion<C> {
        let mut out = ComplexExpansion::new(self.n);
        for (l, (re, im)) in &self.terms {
            let coeff = match phase & 3 {
                0 => (re.clone(), im.clone()),
                1 => (im.neg(), re.clone()),
                2 => (re.neg(), im.neg()),
                _ => (im.clone(), re.neg()),
            };
            out.terms.insert(*l, coeff);
        }
        out
    }

    /// self − (λre + i·λim) · rhs, with rhs real.
    pub fn sub_scaled_real(&self, rhs: &PauliExpansion<C>, lam_re: &C, lam_im: &C) -> Result<Self> {
        if self.n != rhs.qubits() {
            return Err(Error::QubitCountMismatch(self.n, rhs.qubits()));
        }
        let mut out = self.clone();
        for (l, c) in rhs.terms() {
            out.add_term(*l, &lam_re.mul(c).neg(), &lam_im.mul(c).neg());
        }
        Ok(out)
    }

    /// Full convolution product self · rhs with exact iᵖ phase tracking.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::QubitCountMismatch(self.n, rhs.n));
        }
        let mut out = Self::new(self.n);
        for (la, (ra, ia)) in &self.terms {
            for (lb, (rb, ib)) in &rhs.terms {
                // (ra + i·ia)(rb + i·ib), then rotate by i^phase
                let re = ra.mul(rb).sub(&ia.mul(ib));
                let im = ra.mul(ib).add(&ia.mul(rb));
                let (re, im) = match la.mul_phase(*lb) {
                    0 => (re, im),
                    1 => (im.neg(), re),
                    2 => (re.neg(), im.neg()),
                    _ => (im, re.neg()),
                };
                out.add_term(la.xor(*lb), &re, &im);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn ratio(num: i64, den: i64) -> Exact {
        Exact::from_ratio(num, den)
    }

    #[test]
    fn trace_of_identity() {
        let e = ExactExpansion::identity(5);
        assert_eq!(e.trace(), ratio(32, 1));
        assert_eq!(e.frobenius_norm_sq(), ratio(32, 1));
    }

    #[test]
    fn square_of_single_label() {
        let mut e = ExactExpansion::new(2);
        e.set(p("XY").label(), ratio(3, 4));
        let sq = e.square();
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coefficient(PauliLabel::IDENTITY), ratio(9, 16));
    }

    #[test]
    fn square_matches_dense_route() {
        // (X + Z)/sqrt(2) squares to I; work unnormalized: (X+Z)^2 = 2I
        let mut e = ExactExpansion::new(1);
        e.set(p("X").label(), ratio(1, 1));
        e.set(p("Z").label(), ratio(1, 1));
        let sq = e.square();
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.coefficient(PauliLabel::IDENTITY), ratio(2, 1));
    }

    #[test]
    fn anticommuting_cross_terms_cancel() {
        // (aX + bY)^2 = (a^2+b^2) I exactly
        let mut e = ExactExpansion::new(1);
        e.set(p("X").label(), ratio(2, 3));
        e.set(p("Y").label(), ratio(5, 7));
        let sq = e.square();
        assert_eq!(sq.len(), 1);
        assert_eq!(
            sq.coefficient(PauliLabel::IDENTITY),
            ratio(2 * 2 * 49 + 5 * 5 * 9, 9 * 49)
        );
    }

    #[test]
    fn commuting_cross_terms_carry_sign() {
        // XX·YY = (XY)(XY) letterwise: X·Y = iZ twice -> i^2 ZZ = -ZZ
        let mut e = ExactExpansion::new(2);
        e.set(p("XX").label(), ratio(1, 1));
        e.set(p("YY").label(), ratio(1, 1));
        let sq = e.square();
        assert_eq!(sq.coefficient(PauliLabel::IDENTITY), ratio(2, 1));
        assert_eq!(sq.coefficient(p("ZZ").label()), ratio(-2, 1));
    }

    #[test]
    fn conjugation_flips_anticommuting_terms() {
        let mut e = ExactExpansion::new(5);
        e.set(p("ZZZZZ").label(), ratio(1, 2));
        e.set(p("IZYYZ").label(), ratio(1, 4));
        let c = e.conjugated_by(&p("XZIII")).unwrap();
        assert_eq!(c.coefficient(p("ZZZZZ").label()), ratio(-1, 2));
        // IZYYZ vs XZIII: one anticommuting position (qubit 0: I vs X commutes,
        // qubit 1: Z vs Z commutes) -> all commute
        assert_eq!(c.coefficient(p("IZYYZ").label()), ratio(1, 4));
    }

    #[test]
    fn complex_product_tracks_phases() {
        // X · Y = iZ
        let x = ComplexExpansion::<Exact>::from_string(&p("X"));
        let y = ComplexExpansion::<Exact>::from_string(&p("Y"));
        let prod = x.mul(&y).unwrap();
        let (re, im) = prod.coefficient(p("Z").label());
        assert!(Coefficient::is_zero(&re));
        assert_eq!(im, ratio(1, 1));
    }

    #[test]
    fn mul_agrees_with_square_for_real_input() {
        let mut e = ExactExpansion::new(3);
        e.set(p("XYZ").label(), ratio(1, 3));
        e.set(p("ZZI").label(), ratio(-2, 5));
        e.set(p("III").label(), ratio(1, 7));
        e.set(p("YXI").label(), ratio(3, 11));
        let sq = e.square();
        let prod = e.mul(&e).unwrap();
        for (l, c) in sq.terms() {
            let (re, im) = prod.coefficient(*l);
            assert_eq!(re, *c);
            assert!(Coefficient::is_zero(&im));
        }
        assert_eq!(prod.len(), sq.len());
    }

    #[test]
    fn weight_masses_partition_the_norm() {
        let mut e = FloatExpansion::new(5);
        e.set(p("IZYYZ").label(), 0.25);
        e.set(p("XIIII").label(), -0.5);
        e.set(p("IIIII").label(), 1.5);
        let masses = e.weight_masses();
        assert_eq!(masses[4], 0.0625);
        assert_eq!(masses[1], 0.25);
        assert_eq!(masses[0], 2.25);
        let total: f64 = masses.iter().sum();
        assert!((e.frobenius_norm_sq() - 32.0 * total).abs() < 1e-12);
    }

    #[test]
    fn real_matrix_mode_detects_odd_y() {
        let mut e = FloatExpansion::new(5);
        e.set(p("IZYYZ").label(), 1.0);
        assert!(e.is_real_matrix());
        e.set(p("YIIII").label(), 1.0);
        assert!(!e.is_real_matrix());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let mut e = FloatExpansion::new(2);
        e.set(p("XX").label(), 1.0);
        e.add_term(p("XX").label(), &-1.0);
        assert!(e.is_empty());
    }
}
