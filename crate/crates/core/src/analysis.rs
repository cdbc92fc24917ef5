//! Construction and verification of quantum codes given as projectors:
//! projector checks, Knill–Laflamme distance, weight enumerators,
//! stabilizer containment, coset reconstruction, and the canonical
//! ((5,6,2)) code with its explicit basis.

use serde::Serialize;

use crate::dense::{DenseOperator, StateVector};
use crate::error::{Error, Result};
use crate::expansion::{
    pow2, Coefficient, ComplexExpansion, Exact, ExactExpansion, PauliExpansion,
};
use crate::pauli::{Letter, PauliLabel, PauliString};

/// Coefficient vector A₀..A_n of a weight enumerator A(u,v) = Σ_d A_d u^(n−d) v^d.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightEnumerator<C: Coefficient> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> WeightEnumerator<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        WeightEnumerator { coeffs }
    }

    pub fn from_integers(counts: &[i64]) -> Self {
        WeightEnumerator {
            coeffs: counts.iter().map(|&c| C::from_ratio(c, 1)).collect(),
        }
    }

    /// Degree n (the vector has n+1 entries).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64()).collect()
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.coeffs.len() == rhs.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .all(|(a, b)| a.sub(b).within(tol))
    }
}

impl<C: Coefficient> std::fmt::Display for WeightEnumerator<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c.to_f64())?;
            match n - d {
                0 => {}
                1 => write!(f, " u")?,
                e => write!(f, " u^{e}")?,
            }
            match d {
                0 => {}
                1 => write!(f, " v")?,
                e => write!(f, " v^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A_d = Σ_{wt(E)=d} Tr(E·m)·Tr(E†·m); for a real expansion this is
/// 4ⁿ Σ_{wt(E)=d} c_E².
pub fn enumerator_a<C: Coefficient>(m: &PauliExpansion<C>) -> WeightEnumerator<C> {
    let n = m.qubits();
    let scale = pow2::<C>(n).mul(&pow2::<C>(n));
    let masses = m.weight_masses();
    WeightEnumerator {
        coeffs: masses.iter().map(|mass| scale.mul(mass)).collect(),
    }
}

/// B_d = Σ_{wt(E)=d} Tr(E·m·E†·m). Conjugating m by a label E flips the
/// sign of exactly the anticommuting terms, so each E contributes
/// 2ⁿ Σ_F ±c_F².
pub fn enumerator_b<C: Coefficient>(m: &PauliExpansion<C>) -> WeightEnumerator<C> {
    let n = m.qubits();
    let scale = pow2::<C>(n);
    let squares: Vec<(PauliLabel, C)> = m.terms().map(|(l, c)| (*l, c.mul(c))).collect();
    let mut coeffs = vec![C::zero(); n + 1];
    for e in PauliLabel::all(n) {
        let mut sum = C::zero();
        for (f, c2) in &squares {
            if e.commutes(*f) {
                sum = sum.add(c2);
            } else {
                sum = sum.sub(c2);
            }
        }
        let d = e.weight();
        coeffs[d] = coeffs[d].add(&sum);
    }
    WeightEnumerator {
        coeffs: coeffs.iter().map(|c| scale.mul(c)).collect(),
    }
}

/// Outcome of the projector test on an arbitrary Hermitian expansion.
#[derive(Clone, Debug)]
pub struct ProjectorCheck {
    pub is_projector: bool,
    pub rank: usize,
    pub residual: f64,
    pub trace: f64,
}

/// Tests ‖m²−m‖_F ≤ tol and trace within tol of a nonnegative integer.
pub fn verify_projector<C: Coefficient>(m: &PauliExpansion<C>, tol: f64) -> ProjectorCheck {
    let residual_sq = m.square().sub(m).expect("same n").frobenius_norm_sq();
    let trace = m.trace();
    let trace_f = trace.to_f64();
    let rank = trace_f.round().max(0.0) as usize;
    let idempotent = residual_sq.within(tol * tol);
    let integral = trace.sub(&C::from_ratio(rank as i64, 1)).within(tol) && trace_f >= -tol;
    ProjectorCheck {
        is_projector: idempotent && integral,
        rank,
        residual: residual_sq.to_f64().max(0.0).sqrt(),
        trace: trace_f,
    }
}

/// A verified orthogonal projector defining a quantum code of dimension
/// `rank` as its range.
#[derive(Clone, Debug)]
pub struct CodeProjector<C: Coefficient> {
    n: usize,
    rank: usize,
    expansion: PauliExpansion<C>,
    dense: DenseOperator,
}

impl<C: Coefficient> CodeProjector<C> {
    /// Validates P² = P and an integral positive trace within `tol`
    /// (exactly, when tol = 0), then caches the dense realization.
    pub fn new(expansion: PauliExpansion<C>, tol: f64) -> Result<CodeProjector<C>> {
        let check = verify_projector(&expansion, tol);
        if !check.is_projector {
            return Err(Error::NotAProjector(format!(
                "residual {:.3e}, trace {:.6}",
                check.residual, check.trace
            )));
        }
        if check.rank == 0 {
            return Err(Error::NotAProjector("rank 0".into()));
        }
        let dense = DenseOperator::from_expansion(&expansion);
        Ok(CodeProjector {
            n: expansion.qubits(),
            rank: check.rank,
            expansion,
            dense,
        })
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    /// Code dimension K.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn expansion(&self) -> &PauliExpansion<C> {
        &self.expansion
    }

    pub fn dense(&self) -> &DenseOperator {
        &self.dense
    }

    /// Knill–Laflamme scalar: Some(λ) iff ‖PeP − λP‖_F ≤ tol with
    /// λ = Tr(PeP)/K. An i-phase on `e` is factored out first, so λ is
    /// real.
    pub fn kl_scalar(&self, e: &PauliString, tol: f64) -> Result<Option<C>> {
        if e.qubits() != self.n {
            return Err(Error::QubitCountMismatch(self.n, e.qubits()));
        }
        let hermitian = if e.phase() % 2 == 1 {
            PauliString::new(self.n, e.label(), e.phase().wrapping_sub(1) & 3)?
        } else {
            *e
        };
        let p = ComplexExpansion::from_real(&self.expansion);
        let pep = p.mul(&ComplexExpansion::from_string(&hermitian))?.mul(&p)?;
        let (tr_re, tr_im) = pep.trace();
        debug_assert!(tr_im.within(1e-9));
        let lambda = tr_re.mul(&C::from_ratio(1, self.rank as i64));
        let residual_sq = pep
            .sub_scaled_real(&self.expansion, &lambda, &C::zero())?
            .frobenius_norm_sq();
        if residual_sq.within(tol * tol) {
            Ok(Some(lambda))
        } else {
            Ok(None)
        }
    }

    /// Smallest weight class containing an error with no KL scalar; the
    /// code detects every error of weight below the returned distance.
    /// Rank-1 codes use the pure-distance convention: the smallest d ≥ 1
    /// with A_d > 0.
    pub fn min_distance(&self, tol: f64) -> usize {
        if self.rank == 1 {
            let a = enumerator_a(&self.expansion);
            for d in 1..=self.n {
                if !a.coeff(d).within(tol) {
                    return d;
                }
            }
            return self.n + 1;
        }
        for w in 1..=self.n {
            for label in PauliLabel::all(self.n) {
                if label.weight() != w {
                    continue;
                }
                let e = PauliString::new(self.n, label, 0).expect("valid label");
                if self.kl_scalar(&e, tol).expect("same n").is_none() {
                    return w;
                }
            }
        }
        self.n + 1
    }

    /// First error of the given weight with no KL scalar, scanning labels
    /// in ascending order.
    pub fn kl_witness(&self, weight: usize, tol: f64) -> Option<PauliString> {
        for label in PauliLabel::all(self.n) {
            if label.weight() != weight {
                continue;
            }
            let e = PauliString::new(self.n, label, 0).expect("valid label");
            if self.kl_scalar(&e, tol).expect("same n").is_none() {
                return Some(e);
            }
        }
        None
    }

    /// Squared residuals ‖P·(ηPη)‖²_F for all 3n weight-1 errors η. All
    /// zero iff the code corrects one erasure.
    pub fn single_error_orthogonality(&self) -> Vec<(PauliString, C)> {
        let p = ComplexExpansion::from_real(&self.expansion);
        let mut out = Vec::with_capacity(3 * self.n);
        for qubit in 0..self.n {
            for letter in [Letter::X, Letter::Y, Letter::Z] {
                let eta = PauliString::single(self.n, qubit, letter);
                let conj = self.expansion.conjugated_by(&eta).expect("same n");
                let prod = p.mul(&ComplexExpansion::from_real(&conj)).expect("same n");
                out.push((eta, prod.frobenius_norm_sq()));
            }
        }
        out
    }

    /// All signed labels s·E (s ∈ {±1, ±i}) with s·E·P = P within tol.
    /// These fix the code pointwise and generate every stabilizer group
    /// whose code contains this one.
    pub fn stabilizer_containment(&self, tol: f64) -> Vec<PauliString> {
        let p = ComplexExpansion::from_real(&self.expansion);
        let mut out = Vec::new();
        for label in PauliLabel::all(self.n) {
            let e = PauliString::new(self.n, label, 0).expect("valid label");
            let ep = ComplexExpansion::from_string(&e).mul(&p).expect("same n");
            for phase in 0..4u8 {
                // ‖i^phase·EP − P‖²
                let rotated = ep.rotated(phase);
                let diff_sq = rotated
                    .sub_scaled_real(&self.expansion, &C::one(), &C::zero())
                    .expect("same n")
                    .frobenius_norm_sq();
                if diff_sq.within(tol * tol) {
                    out.push(PauliString::new(self.n, label, phase).expect("valid label"));
                }
            }
        }
        out
    }

    /// Σ_r r·P₀·r† over coset representatives, for a rank-1 base
    /// projector. The translated projectors must be pairwise orthogonal;
    /// the result has rank = number of representatives.
    pub fn reconstruct_from_cosets(
        base: &CodeProjector<C>,
        representatives: &[PauliString],
        tol: f64,
    ) -> Result<CodeProjector<C>> {
        if base.rank != 1 {
            return Err(Error::NotRankOne(base.rank));
        }
        let translates: Vec<PauliExpansion<C>> = representatives
            .iter()
            .map(|r| base.expansion.conjugated_by(r))
            .collect::<Result<_>>()?;
        for i in 0..translates.len() {
            for j in 0..i {
                let overlap_sq = translates[i].mul(&translates[j])?.frobenius_norm_sq();
                if !overlap_sq.within(tol * tol) {
                    return Err(Error::OverlappingTranslates(j, i));
                }
            }
        }
        let mut sum = PauliExpansion::new(base.n);
        for t in &translates {
            sum = sum.add(t)?;
        }
        CodeProjector::new(sum, tol)
    }

    /// Full verification report at tolerance `tol` (0 = exact mode for
    /// all coefficient-space checks; dense/basis checks use 1e-10).
    pub fn report(&self, tol: f64) -> VerificationReport {
        self.report_inner(tol, None)
    }

    /// Report plus a check that the given vectors are an orthonormal
    /// basis of the code (Pv = v and Gram = I).
    pub fn report_with_basis(&self, tol: f64, basis: &[StateVector]) -> VerificationReport {
        self.report_inner(tol, Some(basis))
    }

    fn report_inner(&self, tol: f64, basis: Option<&[StateVector]>) -> VerificationReport {
        let check = verify_projector(&self.expansion, tol);
        let distance = self.min_distance(tol);
        let a = enumerator_a(&self.expansion);
        let b = enumerator_b(&self.expansion);
        let erasure = self
            .single_error_orthogonality()
            .iter()
            .all(|(_, r2)| r2.within(tol * tol));
        let containment = self.stabilizer_containment(tol);
        let containment_trivial =
            containment.len() == 1 && containment[0] == PauliString::identity(self.n);
        let pure = (1..distance).all(|d| a.coeff(d).within(tol));
        let basis_ok = basis.map(|vs| self.basis_check(vs, if tol == 0.0 { 1e-10 } else { tol }));
        VerificationReport {
            n: self.n,
            k: self.rank,
            trace: check.trace,
            projector_residual: check.residual,
            distance,
            pure,
            enumerator_a: a.to_f64_vec(),
            enumerator_b: b.to_f64_vec(),
            checks: Checks {
                projector: check.is_projector,
                erasure,
                containment_trivial,
                basis_ok,
            },
        }
    }

    /// Pv = v for each vector and pairwise orthonormality, densely.
    pub fn basis_check(&self, basis: &[StateVector], tol: f64) -> bool {
        if basis.len() != self.rank {
            return false;
        }
        for v in basis {
            match self.dense.apply(v) {
                Ok(image) => {
                    if image.distance(v).unwrap_or(f64::INFINITY) > tol {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
        for (i, v) in basis.iter().enumerate() {
            for (j, w) in basis.iter().enumerate() {
                let Ok(g) = v.inner(w) else { return false };
                let want = if i == j { 1.0 } else { 0.0 };
                if (g.re - want).abs() > tol || g.im.abs() > tol {
                    return false;
                }
            }
        }
        true
    }
}

/// Aggregated pass/fail summary of a code verification run. The JSON
/// field names (`K`, `enumerator_A`, `enumerator_B`) are part of the
/// report file format.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub trace: f64,
    pub projector_residual: f64,
    pub distance: usize,
    pub pure: bool,
    #[serde(rename = "enumerator_A")]
    pub enumerator_a: Vec<f64>,
    #[serde(rename = "enumerator_B")]
    pub enumerator_b: Vec<f64>,
    pub checks: Checks,
}

#[derive(Clone, Debug, Serialize)]
pub struct Checks {
    pub projector: bool,
    pub erasure: bool,
    pub containment_trivial: bool,
    pub basis_ok: Option<bool>,
}

impl VerificationReport {
    /// Internal consistency of the enumerators with the rank: A₀ = K²
    /// and B₀ = K, at relative tolerance `tol`.
    pub fn enumerator_consistent(&self, tol: f64) -> bool {
        let k = self.k as f64;
        (self.enumerator_a[0] - k * k).abs() <= tol.max(1e-12) * k * k
            && (self.enumerator_b[0] - k).abs() <= tol.max(1e-12) * k
    }
}

/// Verification of an arbitrary Hermitian expansion: projector test
/// first, full code analysis when it passes.
pub fn analyze<C: Coefficient>(m: &PauliExpansion<C>, tol: f64) -> VerificationReport {
    analyze_inner(m, tol, None)
}

pub fn analyze_with_basis<C: Coefficient>(
    m: &PauliExpansion<C>,
    tol: f64,
    basis: &[StateVector],
) -> VerificationReport {
    analyze_inner(m, tol, Some(basis))
}

fn analyze_inner<C: Coefficient>(
    m: &PauliExpansion<C>,
    tol: f64,
    basis: Option<&[StateVector]>,
) -> VerificationReport {
    match CodeProjector::new(m.clone(), tol) {
        Ok(p) => match basis {
            Some(b) => p.report_with_basis(tol, b),
            None => p.report(tol),
        },
        Err(_) => {
            let check = verify_projector(m, tol);
            let a = enumerator_a(m);
            let b = enumerator_b(m);
            VerificationReport {
                n: m.qubits(),
                k: check.rank,
                trace: check.trace,
                projector_residual: check.residual,
                distance: 0,
                pure: false,
                enumerator_a: a.to_f64_vec(),
                enumerator_b: b.to_f64_vec(),
                checks: Checks {
                    projector: false,
                    erasure: false,
                    containment_trivial: false,
                    basis_ok: basis.map(|_| false),
                },
            }
        }
    }
}

/// The ((5,6,2)) code projector, transcribed with exact rational
/// coefficients and validated exactly:
///
///   P = 1/16 [ 3·IIIII + (IZYYZ)_cyc + (IXZZX)_cyc − (IYXXY)_cyc
///              + 2·(ZXYYX)_cyc − 2·ZZZZZ ]
///
/// where (·)_cyc sums all five cyclic shifts.
pub fn five_six_two_projector() -> CodeProjector<Exact> {
    let mut e = ExactExpansion::new(5);
    let mut add_orbit = |seed: &str, num: i64| {
        let s: PauliString = seed.parse().expect("literal");
        for shift in s.cyclic_orbit() {
            e.add_term(shift.label(), &Exact::from_ratio(num, 16));
        }
    };
    add_orbit("IZYYZ", 1);
    add_orbit("IXZZX", 1);
    add_orbit("IYXXY", -1);
    add_orbit("ZXYYX", 2);
    e.add_term(PauliLabel::IDENTITY, &Exact::from_ratio(3, 16));
    e.add_term(
        "ZZZZZ".parse::<PauliString>().expect("literal").label(),
        &Exact::from_ratio(-2, 16),
    );
    CodeProjector::new(e, 0.0).expect("exact projector identities hold")
}

/// Orthonormal basis of the ((5,6,2)) code: one cyclically invariant
/// vector and the five cyclic shifts of a second vector, each with 16
/// amplitudes ±1/4.
pub fn five_six_two_basis() -> Vec<StateVector> {
    let mut basis = vec![cyclic_basis_vector()];
    let second = shifted_basis_vector();
    for s in 0..5 {
        basis.push(second.cyclic_shift(s));
    }
    basis
}

/// |00000⟩ − (|00011⟩)_cyc + (|00101⟩)_cyc − (|01111⟩)_cyc, normalized.
fn cyclic_basis_vector() -> StateVector {
    let mut v = StateVector::zero(5);
    let quarter = num_complex::Complex64::new(0.25, 0.0);
    v.add_scaled(&StateVector::basis("00000").expect("literal"), quarter);
    for (seed, sign) in [("00011", -1.0), ("00101", 1.0), ("01111", -1.0)] {
        let base = StateVector::basis(seed).expect("literal");
        for s in 0..5 {
            v.add_scaled(&base.cyclic_shift(s), quarter * sign);
        }
    }
    v
}

/// The 16-term companion vector whose five cyclic shifts complete the
/// basis.
fn shifted_basis_vector() -> StateVector {
    const TERMS: [(f64, &str); 16] = [
        (1.0, "00001"),
        (-1.0, "00010"),
        (-1.0, "00100"),
        (-1.0, "01000"),
        (-1.0, "10000"),
        (1.0, "00111"),
        (-1.0, "01110"),
        (-1.0, "11100"),
        (1.0, "11001"),
        (1.0, "10011"),
        (-1.0, "01011"),
        (1.0, "10110"),
        (-1.0, "01101"),
        (1.0, "11010"),
        (-1.0, "10101"),
        (-1.0, "11111"),
    ];
    let mut v = StateVector::zero(5);
    for (sign, bits) in TERMS {
        let idx = StateVector::index_of(bits).expect("literal");
        v.set_amplitude(idx, num_complex::Complex64::new(sign / 4.0, 0.0));
    }
    v
}
