//! Stabilizer (additive) group machinery: closure from generators,
//! characters and their eigenspace projectors, and coset unions with
//! their minimum distance.
//!
//! Group elements are stored as phase-free labels with a separate ±1
//! sign determined by generator products. A valid stabilizer closure
//! cannot contain i-phases, and reaching −I (the same label with both
//! signs) rejects the generator set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expansion::{Coefficient, ExactExpansion, PauliExpansion};
use crate::pauli::{PauliLabel, PauliString};

/// Commuting generator set with its full closure of 2^r signed elements.
#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliString>,
    /// Element for each generator subset, indexed by subset mask.
    elements: Vec<PauliString>,
    /// Label → subset mask, for membership tests.
    index: BTreeMap<PauliLabel, u32>,
}

impl StabilizerGroup {
    /// Closes the generator set and validates that it is a stabilizer
    /// group: ±1 generator phases, pairwise commuting, independent, and
    /// no −I in the closure.
    pub fn from_generators(generators: &[PauliString]) -> Result<StabilizerGroup> {
        let Some(first) = generators.first() else {
            return Err(Error::DependentGenerators);
        };
        let n = first.qubits();
        for (i, g) in generators.iter().enumerate() {
            if g.qubits() != n {
                return Err(Error::QubitCountMismatch(n, g.qubits()));
            }
            if g.phase() % 2 != 0 {
                return Err(Error::GeneratorPhase(i));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if !generators[i].commutes(&generators[j])? {
                    return Err(Error::AnticommutingGenerators(i, j));
                }
            }
        }
        let r = generators.len();
        if r > 24 {
            return Err(Error::ClosureCapExceeded(1 << 24));
        }

        let mut elements = Vec::with_capacity(1 << r);
        elements.push(PauliString::identity(n));
        for mask in 1u32..1 << r {
            let low = mask.trailing_zeros() as usize;
            let rest = elements[(mask ^ (1 << low)) as usize];
            let element = generators[low].product(&rest)?;
            debug_assert!(
                element.phase() % 2 == 0,
                "i-phase from commuting +-1 generators"
            );
            elements.push(element);
        }

        let mut index = BTreeMap::new();
        for (mask, element) in elements.iter().enumerate() {
            if let Some(&other) = index.get(&element.label()) {
                let same_sign = elements[other as usize].phase() == element.phase();
                return Err(if same_sign {
                    Error::DependentGenerators
                } else {
                    Error::MinusIdentityInClosure
                });
            }
            index.insert(element.label(), mask as u32);
        }

        Ok(StabilizerGroup {
            n,
            generators: generators.to_vec(),
            elements,
            index,
        })
    }

    /// The `[[5,0,3]]` self-dual group generated by the five cyclic shifts
    /// of ZXYYX, all with + sign, ordered by shift 0..4.
    pub fn five_zero_three() -> StabilizerGroup {
        let g: PauliString = "ZXYYX".parse().expect("literal");
        StabilizerGroup::from_generators(&g.cyclic_orbit()).expect("valid by construction")
    }

    /// The trivial group {I} on n qubits (r = 0); its single character
    /// projector is the identity.
    pub fn trivial(n: usize) -> StabilizerGroup {
        let identity = PauliString::identity(n);
        let mut index = BTreeMap::new();
        index.insert(identity.label(), 0);
        StabilizerGroup {
            n,
            generators: Vec::new(),
            elements: vec![identity],
            index,
        }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Signed elements, indexed by generator-subset mask.
    pub fn elements(&self) -> &[PauliString] {
        &self.elements
    }

    pub fn is_self_dual(&self) -> bool {
        self.generators.len() == self.n
    }

    pub fn contains_label(&self, label: PauliLabel) -> bool {
        self.index.contains_key(&label)
    }

    /// Element counts by weight 0..=n; sums to 2^r.
    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.n + 1];
        for e in &self.elements {
            counts[e.weight()] += 1;
        }
        counts
    }

    /// Smallest weight of a non-identity element, or None for the
    /// trivial group. For a self-dual group this is the distance of the
    /// associated `[[n,0,d]]` code.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.elements
            .iter()
            .filter(|e| !e.label().is_identity())
            .map(|e| e.weight())
            .min()
    }

    /// Eigenspace projector P_χ = 2^{−r} Σ_h χ(h)·h, a projector of rank
    /// 2ⁿ⁻ʳ (rank 1 when self-dual), with exact rational coefficients.
    pub fn character_projector(&self, chi: &Character) -> Result<ExactExpansion> {
        self.character_projector_as(chi)
    }

    /// Same, over any coefficient type.
    pub fn character_projector_as<C: Coefficient>(
        &self,
        chi: &Character,
    ) -> Result<PauliExpansion<C>> {
        let r = self.generators.len();
        if chi.len() != r {
            return Err(Error::CharacterLength(chi.len(), r));
        }
        let scale = 1i64 << r;
        let mut out = PauliExpansion::new(self.n);
        for (mask, element) in self.elements.iter().enumerate() {
            let mut num = if chi.eval_subset(mask as u32) { 1 } else { -1 };
            if element.is_negative() {
                num = -num;
            }
            out.add_term(element.label(), &C::from_ratio(num, scale));
        }
        Ok(out)
    }

    /// The character under which every generator fixes `state`: the sign
    /// of g|v⟩ = ±|v⟩ per generator. Errors if some generator does not
    /// stabilize the state up to sign.
    pub fn character_of_state(
        &self,
        state: &crate::dense::StateVector,
        tol: f64,
    ) -> Result<Character> {
        let mut signs = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let image = crate::dense::DenseOperator::from_pauli(g).apply(state)?;
            let plus = image.distance(state)?;
            let minus = image.distance(&state.scaled(num_complex::Complex64::new(-1.0, 0.0)))?;
            if plus <= tol {
                signs.push(1i8);
            } else if minus <= tol {
                signs.push(-1i8);
            } else {
                return Err(Error::NotAProjector(format!(
                    "generator {g} does not fix the state up to sign (residual {:.3e})",
                    plus.min(minus)
                )));
            }
        }
        Character::from_signs(&signs)
    }
}

/// Sign vector defining a homomorphism closure → {±1}: sign i applies to
/// the i-th generator in the order given.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Character {
    minus_mask: u32,
    len: usize,
}

impl Character {
    pub fn from_signs(signs: &[i8]) -> Result<Character> {
        let mut minus_mask = 0u32;
        for (i, s) in signs.iter().enumerate() {
            match s {
                1 => {}
                -1 => minus_mask |= 1 << i,
                _ => return Err(Error::CharacterSign),
            }
        }
        Ok(Character {
            minus_mask,
            len: signs.len(),
        })
    }

    pub fn all_plus(len: usize) -> Character {
        Character { minus_mask: 0, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sign(&self, generator: usize) -> i8 {
        if self.minus_mask >> generator & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.len).map(|i| self.sign(i)).collect()
    }

    /// χ(∏_{i∈mask} g_i): true for +1.
    pub fn eval_subset(&self, mask: u32) -> bool {
        (self.minus_mask & mask).count_ones().is_multiple_of(2)
    }

    /// Pointwise product of two characters.
    pub fn times(&self, rhs: &Character) -> Character {
        debug_assert_eq!(self.len, rhs.len);
        Character {
            minus_mask: self.minus_mask ^ rhs.minus_mask,
            len: self.len,
        }
    }

    /// All 2^r characters in mask order.
    pub fn all(len: usize) -> impl Iterator<Item = Character> {
        (0..1u32 << len).map(move |minus_mask| Character { minus_mask, len })
    }

    /// The sign pattern a Pauli error imprints on the generators:
    /// +1 where it commutes, −1 where it anticommutes.
    pub fn of_error(group: &StabilizerGroup, error: &PauliString) -> Result<Character> {
        let mut minus_mask = 0u32;
        for (i, g) in group.generators().iter().enumerate() {
            if !g.commutes(error)? {
                minus_mask |= 1 << i;
            }
        }
        Ok(Character {
            minus_mask,
            len: group.num_generators(),
        })
    }
}

/// Contents of a stabilizer-group text file: signed generators plus
/// optional coset representatives.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliGroupFile {
    pub generators: Vec<PauliString>,
    pub representatives: Vec<PauliString>,
}

/// Union of K cosets of a base group's label set, the classical object
/// behind an ((n,K,d)) coset-built code.
#[derive(Clone, Debug)]
pub struct CosetUnion {
    base: StabilizerGroup,
    representatives: Vec<PauliString>,
}

impl CosetUnion {
    /// Validates that the representatives lie in pairwise distinct
    /// cosets of the base's phase-free label group.
    pub fn new(base: StabilizerGroup, representatives: Vec<PauliString>) -> Result<CosetUnion> {
        for (i, rep) in representatives.iter().enumerate() {
            if rep.qubits() != base.qubits() {
                return Err(Error::QubitCountMismatch(base.qubits(), rep.qubits()));
            }
            for (j, other) in representatives.iter().enumerate().take(i) {
                if base.contains_label(rep.label().xor(other.label())) {
                    return Err(Error::DuplicateCoset(j, i));
                }
            }
        }
        Ok(CosetUnion {
            base,
            representatives,
        })
    }

    pub fn base(&self) -> &StabilizerGroup {
        &self.base
    }

    pub fn representatives(&self) -> &[PauliString] {
        &self.representatives
    }

    /// Total number of labels: K · 2^r.
    pub fn len(&self) -> usize {
        self.representatives.len() * self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// All labels of the union.
    pub fn labels(&self) -> Vec<PauliLabel> {
        let mut out = Vec::with_capacity(self.len());
        for rep in &self.representatives {
            for h in self.base.elements() {
                out.push(rep.label().xor(h.label()));
            }
        }
        out
    }

    /// Minimum weight of a·b⁻¹ over distinct a, b in the union; phases
    /// are irrelevant to distance, so this is the symplectic difference.
    pub fn min_distance(&self) -> Option<usize> {
        let labels = self.labels();
        let mut best: Option<usize> = None;
        for i in 0..labels.len() {
            for j in 0..i {
                let w = labels[i].xor(labels[j]).weight();
                best = Some(best.map_or(w, |b| b.min(w)));
            }
        }
        best
    }
}
