//! Dense 2ⁿ×2ⁿ complex operators and state vectors.
//!
//! Basis-state index bit k is qubit k, so qubit 0 (the leftmost letter of
//! a Pauli string and the leftmost symbol of a ket) is the least
//! significant index bit. A phase-free label E = (x, z) realizes as
//! E[j⊕x, j] = i^{#Y} · (−1)^{popcount(j ∧ z)}, which reproduces the
//! standard Pauli matrices qubit by qubit.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::expansion::{Coefficient, FloatExpansion, PauliExpansion};
use crate::pauli::{PauliLabel, PauliString};

/// Dense square operator, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    n: usize,
    data: Vec<Complex64>,
}

const I_POWERS: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

impl DenseOperator {
    pub fn zeros(n: usize) -> DenseOperator {
        let dim = 1usize << n;
        DenseOperator {
            n,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(n: usize) -> DenseOperator {
        let mut out = Self::zeros(n);
        let dim = out.dim();
        for j in 0..dim {
            out.data[j * dim + j] = Complex64::ONE;
        }
        out
    }

    /// Realization of a signed Pauli string.
    pub fn from_pauli(p: &PauliString) -> DenseOperator {
        let mut out = Self::zeros(p.qubits());
        let dim = out.dim();
        let label = p.label();
        let phase = I_POWERS[((p.phase() + label.y_count() as u8) & 3) as usize];
        for col in 0..dim {
            let row = col ^ label.x as usize;
            let sign = if (col as u64 & label.z).count_ones().is_multiple_of(2) {
                1.0
            } else {
                -1.0
            };
            out.data[row * dim + col] = phase * sign;
        }
        out
    }

    /// Σ c_E · dense(E).
    pub fn from_expansion<C: Coefficient>(m: &PauliExpansion<C>) -> DenseOperator {
        let mut out = Self::zeros(m.qubits());
        let dim = out.dim();
        for (label, c) in m.terms() {
            let phase = I_POWERS[label.y_count() & 3] * c.to_f64();
            for col in 0..dim {
                let row = col ^ label.x as usize;
                let sign = if (col as u64 & label.z).count_ones().is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                out.data[row * dim + col] += phase * sign;
            }
        }
        out
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    pub fn entry_mut(&mut self, row: usize, col: usize) -> &mut Complex64 {
        let dim = self.dim();
        &mut self.data[row * dim + col]
    }

    /// Matrix product self · rhs.
    pub fn compose(&self, rhs: &DenseOperator) -> Result<DenseOperator> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.dim(), rhs.dim()));
        }
        let dim = self.dim();
        let mut out = Self::zeros(self.n);
        for i in 0..dim {
            for k in 0..dim {
                let a = self.data[i * dim + k];
                if a == Complex64::ZERO {
                    continue;
                }
                let row = &rhs.data[k * dim..(k + 1) * dim];
                let dst = &mut out.data[i * dim..(i + 1) * dim];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Complex64 {
        let dim = self.dim();
        (0..dim).map(|j| self.data[j * dim + j]).sum()
    }

    pub fn adjoint(&self) -> DenseOperator {
        let dim = self.dim();
        let mut out = Self::zeros(self.n);
        for r in 0..dim {
            for c in 0..dim {
                out.data[c * dim + r] = self.data[r * dim + c].conj();
            }
        }
        out
    }

    pub fn scaled(&self, factor: Complex64) -> DenseOperator {
        DenseOperator {
            n: self.n,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn add(&self, rhs: &DenseOperator) -> Result<DenseOperator> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.dim(), rhs.dim()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DenseOperator { n: self.n, data })
    }

    pub fn sub(&self, rhs: &DenseOperator) -> Result<DenseOperator> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.dim(), rhs.dim()));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(DenseOperator { n: self.n, data })
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ‖self − rhs‖_F.
    pub fn frobenius_distance(&self, rhs: &DenseOperator) -> Result<f64> {
        Ok(self.sub(rhs)?.frobenius_norm())
    }

    /// ‖A − A†‖_F.
    pub fn hermiticity_defect(&self) -> f64 {
        self.sub(&self.adjoint())
            .expect("same shape")
            .frobenius_norm()
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if self.n != v.n {
            return Err(Error::DimensionMismatch(self.dim(), v.amps.len()));
        }
        let dim = self.dim();
        let mut amps = vec![Complex64::ZERO; dim];
        for (r, amp) in amps.iter_mut().enumerate() {
            *amp = (0..dim).map(|c| self.data[r * dim + c] * v.amps[c]).sum();
        }
        Ok(StateVector { n: self.n, amps })
    }

    /// Pauli coefficients c_E = Tr(E·a)/2ⁿ for every label. Errors if the
    /// operator is not Hermitian within `tol`; exact zeros are dropped, all
    /// other coefficients are kept (prune separately if needed).
    pub fn to_expansion(&self, tol: f64) -> Result<FloatExpansion> {
        let defect = self.hermiticity_defect();
        if defect > tol {
            return Err(Error::NotHermitian(defect));
        }
        let dim = self.dim();
        let mut out = FloatExpansion::new(self.n);
        for label in PauliLabel::all(self.n) {
            // Tr(E·a) = Σ_j E[j, j⊕x] a[j⊕x, j]
            let phase = I_POWERS[label.y_count() & 3];
            let mut t = Complex64::ZERO;
            for j in 0..dim {
                let jx = j ^ label.x as usize;
                let sign = if (jx as u64 & label.z).count_ones().is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                t += phase * sign * self.data[jx * dim + j];
            }
            out.set(label, t.re / dim as f64);
        }
        Ok(out)
    }
}

/// State on n qubits; amplitude index bit k is qubit k, and ket strings
/// list qubit 0 first ("00011" sets qubits 3 and 4).
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zero(n: usize) -> StateVector {
        StateVector {
            n,
            amps: vec![Complex64::ZERO; 1 << n],
        }
    }

    /// Basis ket |bits⟩ from a string such as "00101".
    pub fn basis(bits: &str) -> Result<StateVector> {
        let n = bits.len();
        if n == 0 {
            return Err(Error::EmptyPauli);
        }
        if n > 24 {
            return Err(Error::TooManyQubits);
        }
        let mut v = Self::zero(n);
        v.amps[Self::index_of(bits)?] = Complex64::ONE;
        Ok(v)
    }

    /// Index of a ket string under the qubit-k-is-bit-k convention.
    pub fn index_of(bits: &str) -> Result<usize> {
        let mut idx = 0usize;
        for (k, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => idx |= 1 << k,
                _ => {
                    return Err(Error::InvalidPauliChar {
                        position: k + 1,
                        found: c,
                    })
                }
            }
        }
        Ok(idx)
    }

    pub fn bits_of(index: usize, n: usize) -> String {
        (0..n)
            .map(|k| if index >> k & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amps[index]
    }

    pub fn set_amplitude(&mut self, index: usize, value: Complex64) {
        self.amps[index] = value;
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn inner(&self, rhs: &StateVector) -> Result<Complex64> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.amps.len(), rhs.amps.len()));
        }
        Ok(self
            .amps
            .iter()
            .zip(&rhs.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, factor: Complex64) -> StateVector {
        StateVector {
            n: self.n,
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn normalized(&self) -> StateVector {
        self.scaled(Complex64::new(1.0 / self.norm(), 0.0))
    }

    pub fn sub(&self, rhs: &StateVector) -> Result<StateVector> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.amps.len(), rhs.amps.len()));
        }
        let amps = self
            .amps
            .iter()
            .zip(&rhs.amps)
            .map(|(a, b)| a - b)
            .collect();
        Ok(StateVector { n: self.n, amps })
    }

    /// self += factor · rhs, elementwise.
    pub fn add_scaled(&mut self, rhs: &StateVector, factor: Complex64) {
        assert_eq!(self.n, rhs.n);
        for (a, b) in self.amps.iter_mut().zip(&rhs.amps) {
            *a += factor * b;
        }
    }

    pub fn distance(&self, rhs: &StateVector) -> Result<f64> {
        Ok(self.sub(rhs)?.norm())
    }

    /// Outer product |v⟩⟨v|.
    pub fn projector(&self) -> DenseOperator {
        let dim = 1usize << self.n;
        let mut out = DenseOperator::zeros(self.n);
        for r in 0..dim {
            for c in 0..dim {
                *out.entry_mut(r, c) = self.amps[r] * self.amps[c].conj();
            }
        }
        out
    }

    /// Moves the amplitude of each ket |b⟩ to the ket with bit k at
    /// position (k + s) mod n.
    pub fn cyclic_shift(&self, s: i64) -> StateVector {
        let n = self.n;
        let s = s.rem_euclid(n as i64) as u32;
        if s == 0 {
            return self.clone();
        }
        let m = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut out = Self::zero(n);
        for (idx, amp) in self.amps.iter().enumerate() {
            let b = idx as u64;
            let shifted = ((b << s | b >> (n as u32 - s)) & m) as usize;
            out.amps[shifted] = *amp;
        }
        out
    }
}
