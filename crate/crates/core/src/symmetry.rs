//! Symmetries of Pauli expansions: qubit permutations combined with
//! per-qubit signed rotations of (X, Y, Z).
//!
//! Elements act on phase-free labels only; global phases of implementing
//! unitaries are quotiented out, which is exactly the group the counting
//! here refers to. A term is first rotated qubit by qubit (signs multiply
//! into the coefficient), then the letter at qubit k moves to qubit
//! `perm[k]`.

use std::collections::{HashSet, VecDeque};

use crate::analysis::CodeProjector;
use crate::error::{Error, Result};
use crate::expansion::{Coefficient, PauliExpansion};
use crate::pauli::{Letter, PauliLabel, PauliString};
use crate::stabilizer::{Character, StabilizerGroup};

/// Signed permutation of (X, Y, Z) with determinant +1, i.e. realizable
/// as conjugation by a single-qubit unitary. 24 such rotations exist.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LocalRotation {
    /// Image of X, Y, Z in that order; `true` means negated.
    images: [(Letter, bool); 3],
}

fn letter_index(letter: Letter) -> usize {
    match letter {
        Letter::X => 0,
        Letter::Y => 1,
        Letter::Z => 2,
        Letter::I => panic!("rotations act on non-identity letters"),
    }
}

impl LocalRotation {
    /// Validates that the images form a proper (determinant +1) signed
    /// permutation of the three letters.
    pub fn new(images: [(Letter, bool); 3]) -> Result<LocalRotation> {
        let mut seen = [false; 3];
        for (letter, _) in images {
            if letter == Letter::I {
                return Err(Error::InvalidRotation);
            }
            let idx = letter_index(letter);
            if seen[idx] {
                return Err(Error::InvalidRotation);
            }
            seen[idx] = true;
        }
        let perm: Vec<usize> = images.iter().map(|(l, _)| letter_index(*l)).collect();
        let even = (perm[0], perm[1], perm[2]) == (0, 1, 2)
            || (perm[0], perm[1], perm[2]) == (1, 2, 0)
            || (perm[0], perm[1], perm[2]) == (2, 0, 1);
        let negations = images.iter().filter(|(_, neg)| *neg).count();
        let det_positive = even == (negations % 2 == 0);
        if !det_positive {
            return Err(Error::ImproperRotation);
        }
        Ok(LocalRotation { images })
    }

    pub fn identity() -> LocalRotation {
        LocalRotation {
            images: [(Letter::X, false), (Letter::Y, false), (Letter::Z, false)],
        }
    }

    /// The rotation induced by conjugation with `fixed`: that letter is
    /// fixed and the other two are negated.
    pub fn conjugation_by(fixed: Letter) -> LocalRotation {
        let images = [Letter::X, Letter::Y, Letter::Z].map(|l| (l, l != fixed));
        LocalRotation { images }
    }

    pub fn apply(&self, letter: Letter) -> (Letter, bool) {
        self.images[letter_index(letter)]
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &LocalRotation) -> LocalRotation {
        let images = [Letter::X, Letter::Y, Letter::Z].map(|l| {
            let (mid, s1) = other.apply(l);
            let (out, s2) = self.apply(mid);
            (out, s1 != s2)
        });
        LocalRotation { images }
    }

    pub fn inverse(&self) -> LocalRotation {
        let mut images = [(Letter::I, false); 3];
        for (src, (dst, neg)) in [Letter::X, Letter::Y, Letter::Z]
            .into_iter()
            .zip(self.images)
        {
            images[letter_index(dst)] = (src, neg);
        }
        LocalRotation { images }
    }

    /// All 24 proper rotations.
    pub fn all() -> Vec<LocalRotation> {
        let letters = [Letter::X, Letter::Y, Letter::Z];
        let mut out = Vec::new();
        for a in letters {
            for b in letters {
                for c in letters {
                    for signs in 0..8u8 {
                        let images = [
                            (a, signs & 1 != 0),
                            (b, signs & 2 != 0),
                            (c, signs & 4 != 0),
                        ];
                        if let Ok(rot) = LocalRotation::new(images) {
                            out.push(rot);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Qubit permutation plus one local rotation per qubit, acting on
/// phase-free Pauli labels while preserving weight and commutation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymmetryElement {
    /// perm[k] = destination of qubit k.
    perm: Vec<u8>,
    rotations: Vec<LocalRotation>,
}

impl SymmetryElement {
    pub fn new(perm: Vec<u8>, rotations: Vec<LocalRotation>) -> Result<SymmetryElement> {
        let n = perm.len();
        if rotations.len() != n || n > 64 {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = vec![false; n];
        for &dst in &perm {
            if dst as usize >= n || seen[dst as usize] {
                return Err(Error::InvalidPermutation);
            }
            seen[dst as usize] = true;
        }
        Ok(SymmetryElement { perm, rotations })
    }

    pub fn identity(n: usize) -> SymmetryElement {
        SymmetryElement {
            perm: (0..n as u8).collect(),
            rotations: vec![LocalRotation::identity(); n],
        }
    }

    /// Pure qubit relabeling k → (k + s) mod n.
    pub fn cyclic_shift(n: usize, s: i64) -> SymmetryElement {
        let s = s.rem_euclid(n as i64) as usize;
        SymmetryElement {
            perm: (0..n).map(|k| ((k + s) % n) as u8).collect(),
            rotations: vec![LocalRotation::identity(); n],
        }
    }

    /// Conjugation by a Pauli string: identity permutation, and on every
    /// qubit carrying a letter of `e` the rotation fixing that letter and
    /// negating the other two.
    pub fn conjugation_by(e: &PauliString) -> SymmetryElement {
        let n = e.qubits();
        let rotations = (0..n)
            .map(|k| match e.letter(k) {
                Letter::I => LocalRotation::identity(),
                l => LocalRotation::conjugation_by(l),
            })
            .collect();
        SymmetryElement {
            perm: (0..n as u8).collect(),
            rotations,
        }
    }

    pub fn qubits(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[u8] {
        &self.perm
    }

    pub fn rotations(&self) -> &[LocalRotation] {
        &self.rotations
    }

    /// self ∘ other: apply `other` first, then self.
    pub fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        let n = self.perm.len();
        debug_assert_eq!(n, other.perm.len());
        let mut perm = vec![0u8; n];
        let mut rotations = vec![LocalRotation::identity(); n];
        for k in 0..n {
            let mid = other.perm[k] as usize;
            perm[k] = self.perm[mid];
            rotations[k] = self.rotations[mid].compose(&other.rotations[k]);
        }
        SymmetryElement { perm, rotations }
    }

    pub fn inverse(&self) -> SymmetryElement {
        let n = self.perm.len();
        let mut perm = vec![0u8; n];
        let mut rotations = vec![LocalRotation::identity(); n];
        for k in 0..n {
            let dst = self.perm[k] as usize;
            perm[dst] = k as u8;
            rotations[dst] = self.rotations[k].inverse();
        }
        SymmetryElement { perm, rotations }
    }

    /// Image of a phase-free label and the accumulated sign.
    pub fn act_label(&self, label: PauliLabel) -> (PauliLabel, bool) {
        let mut out = PauliLabel::IDENTITY;
        let mut negative = false;
        let mut support = label.x | label.z;
        while support != 0 {
            let k = support.trailing_zeros() as usize;
            support &= support - 1;
            let (letter, neg) = self.rotations[k].apply(label.letter(k));
            negative ^= neg;
            out.set_letter(self.perm[k] as usize, letter);
        }
        (out, negative)
    }

    /// Linear action on an expansion: rotate letters, multiply signs into
    /// coefficients, move letters by the permutation.
    pub fn act_on_expansion<C: Coefficient>(&self, m: &PauliExpansion<C>) -> PauliExpansion<C> {
        let mut out = PauliExpansion::new(m.qubits());
        for (label, c) in m.terms() {
            let (image, negative) = self.act_label(*label);
            let coeff = if negative { c.neg() } else { c.clone() };
            out.add_term(image, &coeff);
        }
        out
    }

    /// act(m) = m within tol (exactly, when tol = 0).
    pub fn is_symmetry_of<C: Coefficient>(&self, m: &PauliExpansion<C>, tol: f64) -> bool {
        self.act_on_expansion(m).approx_eq(m, tol)
    }
}

/// Generator families for the symmetry group of the ((5,6,2)) code.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymmetryLevel {
    /// Conjugations by the five stabilizer generators (order 32).
    Stabilizer,
    /// Plus the cyclic shift and the doubling map with its rotation
    /// (order 640).
    Affine,
    /// Plus the qubit-2/3 transposition element (order 3840).
    Full,
}

/// Symmetry generators of the ((5,6,2)) code at the requested level.
pub fn five_six_two_generators(level: SymmetryLevel) -> Vec<SymmetryElement> {
    let seed: PauliString = "ZXYYX".parse().expect("literal");
    let mut gens: Vec<SymmetryElement> = seed
        .cyclic_orbit()
        .iter()
        .map(SymmetryElement::conjugation_by)
        .collect();
    if level == SymmetryLevel::Stabilizer {
        return gens;
    }

    gens.push(SymmetryElement::cyclic_shift(5, 1));

    // k → 2k (mod 5) with x → y, y → −x, z → z on every qubit
    let quarter_turn =
        LocalRotation::new([(Letter::Y, false), (Letter::X, true), (Letter::Z, false)])
            .expect("proper rotation");
    let doubling = SymmetryElement::new(
        (0..5).map(|k| (2 * k % 5) as u8).collect(),
        vec![quarter_turn; 5],
    )
    .expect("valid permutation");
    gens.push(doubling);
    if level == SymmetryLevel::Affine {
        return gens;
    }

    // exchange qubits 2 and 3 (k → k³ mod 5); per qubit negate one letter
    // and exchange the other two, the negated letters being Z,Y,X,X,Y
    let negate_swap = |negated: Letter| {
        let images = match negated {
            Letter::X => [(Letter::X, true), (Letter::Z, false), (Letter::Y, false)],
            Letter::Y => [(Letter::Z, false), (Letter::Y, true), (Letter::X, false)],
            Letter::Z => [(Letter::Y, false), (Letter::X, false), (Letter::Z, true)],
            Letter::I => unreachable!(),
        };
        LocalRotation::new(images).expect("proper rotation")
    };
    let transposition = SymmetryElement::new(
        vec![0, 1, 3, 2, 4],
        [Letter::Z, Letter::Y, Letter::X, Letter::X, Letter::Y]
            .into_iter()
            .map(negate_swap)
            .collect(),
    )
    .expect("valid permutation");
    gens.push(transposition);
    gens
}

/// Size of the closure of `generators` under composition, as abstract
/// maps on phase-free labels. Errors once the closure exceeds `cap`.
pub fn group_order(generators: &[SymmetryElement], cap: usize) -> Result<usize> {
    Ok(close_group(generators, cap)?.len())
}

/// Full closure under composition, breadth-first from the identity.
pub fn close_group(generators: &[SymmetryElement], cap: usize) -> Result<Vec<SymmetryElement>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let n = first.qubits();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    let identity = SymmetryElement::identity(n);
    seen.insert(identity.clone());
    out.push(identity.clone());
    queue.push_back(identity);
    while let Some(g) = queue.pop_front() {
        for h in generators {
            let next = h.compose(&g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

/// Order of the projection of the closure onto qubit permutations.
/// The projection is a homomorphism, so its image is closed directly.
pub fn permutation_image_order(generators: &[SymmetryElement], cap: usize) -> Result<usize> {
    let Some(first) = generators.first() else {
        return Ok(0);
    };
    let n = first.qubits();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    let identity: Vec<u8> = (0..n as u8).collect();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(g) = queue.pop_front() {
        for h in generators {
            let next: Vec<u8> = (0..n).map(|k| h.perm[g[k] as usize]).collect();
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                queue.push_back(next);
            }
        }
    }
    Ok(seen.len())
}

/// The characters of a self-dual group whose eigenspaces compose the
/// code: all χ with Tr(P_χ · P) > tol. Validates that conjugation by
/// every generator is a symmetry of P and that the selected projectors
/// sum back to P.
pub fn character_support<C: Coefficient>(
    p: &CodeProjector<C>,
    group: &StabilizerGroup,
    tol: f64,
) -> Result<Vec<Character>> {
    let r = group.num_generators();
    if !group.is_self_dual() {
        return Err(Error::NotSelfDual {
            r,
            n: group.qubits(),
        });
    }
    for g in group.generators() {
        if !SymmetryElement::conjugation_by(g).is_symmetry_of(p.expansion(), tol) {
            return Err(Error::NotASymmetry(g.to_string()));
        }
    }

    // Tr(P_χ·P) = Σ_{h} χ(h)·sign(h)·c_P(label(h)) for a self-dual group
    let contributions: Vec<(u32, C)> = group
        .elements()
        .iter()
        .enumerate()
        .map(|(mask, h)| {
            let c = p.expansion().coefficient(h.label());
            (mask as u32, if h.is_negative() { c.neg() } else { c })
        })
        .collect();

    let mut support = Vec::new();
    for chi in Character::all(r) {
        let mut t = C::zero();
        for (mask, c) in &contributions {
            if chi.eval_subset(*mask) {
                t = t.add(c);
            } else {
                t = t.sub(c);
            }
        }
        if !t.within(tol) {
            support.push(chi);
        }
    }

    // the selected projectors must resolve P exactly
    let mut sum = PauliExpansion::<C>::new(p.qubits());
    for chi in &support {
        sum = sum.add(&group.character_projector_as(chi)?)?;
    }
    let residual_sq = sum.sub(p.expansion())?.frobenius_norm_sq();
    if !residual_sq.within(tol * tol) {
        return Err(Error::CharacterResolution(
            residual_sq.to_f64().max(0.0).sqrt(),
        ));
    }
    Ok(support)
}

/// For each weight-1 error η, whether the support shifted by η's
/// commutation character is disjoint from the code's support: the
/// erasure-correcting structure seen through the eigenspace labels.
pub fn error_character_disjointness<C: Coefficient>(
    p: &CodeProjector<C>,
    group: &StabilizerGroup,
    tol: f64,
) -> Result<Vec<(PauliString, bool)>> {
    let support = character_support(p, group, tol)?;
    let n = p.qubits();
    let mut out = Vec::with_capacity(3 * n);
    for qubit in 0..n {
        for letter in [Letter::X, Letter::Y, Letter::Z] {
            let eta = PauliString::single(n, qubit, letter);
            let nu = Character::of_error(group, &eta)?;
            out.push((eta, shifted_support_disjoint(&support, &nu)));
        }
    }
    Ok(out)
}

/// Is {χ·ν : χ ∈ support} disjoint from support?
pub fn shifted_support_disjoint(support: &[Character], nu: &Character) -> bool {
    support.iter().all(|chi| !support.contains(&chi.times(nu)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{enumerator_a, five_six_two_projector};
    use crate::dense::DenseOperator;
    use crate::expansion::{Exact, ExactExpansion, FloatExpansion};

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn there_are_24_proper_rotations() {
        let all = LocalRotation::all();
        assert_eq!(all.len(), 24);
        // closed under composition and inversion
        for a in &all {
            assert!(all.contains(&a.inverse()));
            for b in &all {
                assert!(all.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn improper_rotations_are_rejected() {
        // plain transposition x↔y with no negation has determinant −1
        let err = LocalRotation::new([(Letter::Y, false), (Letter::X, false), (Letter::Z, false)]);
        assert!(matches!(err, Err(Error::ImproperRotation)));
        // negating a single letter alone is improper too
        let err = LocalRotation::new([(Letter::X, true), (Letter::Y, false), (Letter::Z, false)]);
        assert!(matches!(err, Err(Error::ImproperRotation)));
        let err = LocalRotation::new([(Letter::X, false), (Letter::X, false), (Letter::Z, false)]);
        assert!(matches!(err, Err(Error::InvalidRotation)));
    }

    #[test]
    fn conjugation_rotation_signs() {
        let rot = LocalRotation::conjugation_by(Letter::Z);
        assert_eq!(rot.apply(Letter::X), (Letter::X, true));
        assert_eq!(rot.apply(Letter::Y), (Letter::Y, true));
        assert_eq!(rot.apply(Letter::Z), (Letter::Z, false));
    }

    #[test]
    fn conjugation_matches_dense_conjugation() {
        // act_on_expansion for conjugation elements must equal U m U†
        let e = p("ZXYYX");
        let sym = SymmetryElement::conjugation_by(&e);
        let mut m = FloatExpansion::new(5);
        m.set(p("IZYYZ").label(), 0.5);
        m.set(p("XIIII").label(), -0.25);
        m.set(p("IIIII").label(), 1.0);
        let acted = sym.act_on_expansion(&m);

        let u = DenseOperator::from_pauli(&e);
        let dense = u
            .compose(&DenseOperator::from_expansion(&m))
            .unwrap()
            .compose(&u.adjoint())
            .unwrap();
        let direct = DenseOperator::from_expansion(&acted);
        assert!(dense.frobenius_distance(&direct).unwrap() < 1e-12);
    }

    #[test]
    fn identity_element_acts_trivially() {
        let m = five_six_two_projector().expansion().clone();
        let id = SymmetryElement::identity(5);
        assert_eq!(id.act_on_expansion(&m), m);
    }

    #[test]
    fn all_generators_are_symmetries_of_the_code() {
        let m = five_six_two_projector().expansion().clone();
        for level in [
            SymmetryLevel::Stabilizer,
            SymmetryLevel::Affine,
            SymmetryLevel::Full,
        ] {
            for g in five_six_two_generators(level) {
                assert!(g.is_symmetry_of(&m, 0.0));
            }
        }
    }

    #[test]
    fn generator_counts_per_level() {
        assert_eq!(five_six_two_generators(SymmetryLevel::Stabilizer).len(), 5);
        assert_eq!(five_six_two_generators(SymmetryLevel::Affine).len(), 7);
        assert_eq!(five_six_two_generators(SymmetryLevel::Full).len(), 8);
    }

    #[test]
    fn fixed_letters_stay_fixed() {
        // the doubling element fixes Z everywhere, and ZZZZZ is invariant
        let gens = five_six_two_generators(SymmetryLevel::Affine);
        let doubling = &gens[6];
        let mut m = ExactExpansion::new(5);
        m.set(p("ZZZZZ").label(), Exact::from_ratio(1, 1));
        assert_eq!(doubling.act_on_expansion(&m), m);
    }

    #[test]
    fn group_orders() {
        let cap = 10_000;
        let stab = five_six_two_generators(SymmetryLevel::Stabilizer);
        assert_eq!(group_order(&stab, cap).unwrap(), 32);
        let affine = five_six_two_generators(SymmetryLevel::Affine);
        assert_eq!(group_order(&affine, cap).unwrap(), 640);
        let full = five_six_two_generators(SymmetryLevel::Full);
        assert_eq!(group_order(&full, cap).unwrap(), 3840);
    }

    #[test]
    fn permutation_images() {
        let cap = 10_000;
        assert_eq!(
            permutation_image_order(&five_six_two_generators(SymmetryLevel::Stabilizer), cap)
                .unwrap(),
            1
        );
        // closure of k→k+1 and k→2k: the affine maps mod 5
        assert_eq!(
            permutation_image_order(&five_six_two_generators(SymmetryLevel::Affine), cap).unwrap(),
            20
        );
        assert_eq!(
            permutation_image_order(&five_six_two_generators(SymmetryLevel::Full), cap).unwrap(),
            120
        );
    }

    #[test]
    fn every_closure_element_is_a_symmetry() {
        let m = five_six_two_projector().expansion().clone();
        let closure = close_group(&five_six_two_generators(SymmetryLevel::Full), 5000).unwrap();
        assert_eq!(closure.len(), 3840);
        for g in &closure {
            assert!(g.is_symmetry_of(&m, 0.0));
        }
    }

    #[test]
    fn closure_cap_is_enforced() {
        let full = five_six_two_generators(SymmetryLevel::Full);
        assert!(matches!(
            group_order(&full, 100),
            Err(Error::ClosureCapExceeded(100))
        ));
    }

    #[test]
    fn action_preserves_weight_and_enumerator() {
        let m = five_six_two_projector().expansion().clone();
        let gens = five_six_two_generators(SymmetryLevel::Full);
        let g = gens[5].compose(&gens[7]).compose(&gens[1]);
        let acted = g.act_on_expansion(&m);
        assert_eq!(enumerator_a(&acted), enumerator_a(&m));
    }

    #[test]
    fn action_preserves_commutation() {
        let g = five_six_two_generators(SymmetryLevel::Full)
            .into_iter()
            .fold(SymmetryElement::identity(5), |acc, h| h.compose(&acc));
        let labels = [p("IZYYZ"), p("XIIII"), p("ZXYYX"), p("YYIXZ")];
        for a in &labels {
            for b in &labels {
                let (ia, _) = g.act_label(a.label());
                let (ib, _) = g.act_label(b.label());
                assert_eq!(a.label().commutes(b.label()), ia.commutes(ib));
            }
        }
    }

    #[test]
    fn compose_and_inverse_are_consistent() {
        let gens = five_six_two_generators(SymmetryLevel::Full);
        let g = gens[6].compose(&gens[7]);
        let id = SymmetryElement::identity(5);
        assert_eq!(g.compose(&g.inverse()), id);
        assert_eq!(g.inverse().compose(&g), id);
        // composition acts as function composition on labels
        let label = p("XZIIY").label();
        let (mid, s1) = gens[7].act_label(label);
        let (fin, s2) = gens[6].act_label(mid);
        let (direct, s) = g.act_label(label);
        assert_eq!(fin, direct);
        assert_eq!(s1 ^ s2, s);
    }

    #[test]
    fn support_of_the_code_is_six_characters() {
        let proj = five_six_two_projector();
        let h = StabilizerGroup::five_zero_three();
        let support = character_support(&proj, &h, 0.0).unwrap();
        assert_eq!(support.len(), 6);
        // the all-plus character and the five single-minus characters
        assert!(support.contains(&Character::all_plus(5)));
        for i in 0..5 {
            let mut signs = [1i8; 5];
            signs[i] = -1;
            assert!(support.contains(&Character::from_signs(&signs).unwrap()));
        }
    }

    #[test]
    fn support_of_a_single_eigenspace() {
        let h = StabilizerGroup::five_zero_three();
        let chi = Character::from_signs(&[1, -1, 1, -1, 1]).unwrap();
        let p0 = CodeProjector::new(h.character_projector(&chi).unwrap(), 0.0).unwrap();
        assert_eq!(character_support(&p0, &h, 0.0).unwrap(), vec![chi]);
    }

    #[test]
    fn support_of_identity_is_everything() {
        let id = CodeProjector::new(ExactExpansion::identity(5), 0.0).unwrap();
        let h = StabilizerGroup::five_zero_three();
        assert_eq!(character_support(&id, &h, 0.0).unwrap().len(), 32);
    }

    #[test]
    fn weight_one_errors_shift_support_off_itself() {
        let proj = five_six_two_projector();
        let h = StabilizerGroup::five_zero_three();
        let verdicts = error_character_disjointness(&proj, &h, 0.0).unwrap();
        assert_eq!(verdicts.len(), 15);
        for (eta, disjoint) in verdicts {
            assert!(disjoint, "support not disjoint under {eta}");
        }
        // the identity error shifts nothing
        let support = character_support(&proj, &h, 0.0).unwrap();
        let trivial = Character::all_plus(5);
        assert!(!shifted_support_disjoint(&support, &trivial));
    }
}
