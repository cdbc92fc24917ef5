//! Signed n-qubit Pauli operators in symplectic bit form.
//!
//! A [`PauliString`] is a phase exponent p (a global factor iᵖ) together
//! with per-qubit (x, z) bits decoding as (0,0) → I, (1,0) → X, (0,1) → Z,
//! (1,1) → Y. Phase-0 strings are exactly the Hermitian tensor products:
//! the i of σy = iσxσz is absorbed into the Y letter, so "Y" realizes the
//! honest σy = ((0,−i),(i,0)).
//!
//! Qubit 0 is the leftmost letter and corresponds to bit 0 of the packed
//! words. All arithmetic is exact; phases are tracked mod 4, never as
//! floats.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Bit capacity of the packed symplectic words.
pub const MAX_QUBITS: usize = 64;

/// One tensor factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

/// A phase-free Pauli label: the (x, z) bit pair without sign or qubit
/// count. Bit k of each word is qubit k. Used as the key type for
/// expansions and group element sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PauliLabel {
    pub x: u64,
    pub z: u64,
}

impl PauliLabel {
    pub const IDENTITY: PauliLabel = PauliLabel { x: 0, z: 0 };

    pub fn is_identity(self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Number of non-identity tensor factors.
    pub fn weight(self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    pub fn y_count(self) -> usize {
        (self.x & self.z).count_ones() as usize
    }

    /// Symplectic inner product: true iff the labels commute.
    pub fn commutes(self, other: PauliLabel) -> bool {
        ((self.x & other.z).count_ones() + (self.z & other.x).count_ones()).is_multiple_of(2)
    }

    /// Label of the product, ignoring phase (bitwise xor).
    pub fn xor(self, other: PauliLabel) -> PauliLabel {
        PauliLabel {
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        }
    }

    /// Phase exponent p of self · other = iᵖ (self xor other).
    ///
    /// Derived from letter(x,z) = i^(x·z) XˣZᶻ per qubit. For commuting
    /// labels p is even; for anticommuting labels p is odd.
    pub fn mul_phase(self, other: PauliLabel) -> u8 {
        let joined = self.xor(other);
        let p = (self.x & self.z).count_ones() as i64
            + (other.x & other.z).count_ones() as i64
            + 2 * (self.z & other.x).count_ones() as i64
            - (joined.x & joined.z).count_ones() as i64;
        p.rem_euclid(4) as u8
    }

    pub fn letter(self, qubit: usize) -> Letter {
        Letter::from_bits(self.x >> qubit & 1 == 1, self.z >> qubit & 1 == 1)
    }

    pub fn set_letter(&mut self, qubit: usize, letter: Letter) {
        let (x, z) = letter.bits();
        self.x = self.x & !(1 << qubit) | (x as u64) << qubit;
        self.z = self.z & !(1 << qubit) | (z as u64) << qubit;
    }

    /// All 4ⁿ labels on n qubits, in ascending (x, z) order.
    pub fn all(n: usize) -> impl Iterator<Item = PauliLabel> {
        assert!(n <= 16, "label enumeration is only sensible for small n");
        let side = 1u64 << n;
        (0..side).flat_map(move |x| (0..side).map(move |z| PauliLabel { x, z }))
    }

    pub fn letters(self, n: usize) -> String {
        (0..n).map(|k| self.letter(k).to_char()).collect()
    }
}

/// A signed Pauli operator: iᵖʰᵃˢᵉ · (tensor product of letters).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PauliString {
    n: usize,
    label: PauliLabel,
    phase: u8,
}

impl PauliString {
    pub fn new(n: usize, label: PauliLabel, phase: u8) -> Result<PauliString> {
        if n == 0 {
            return Err(Error::EmptyPauli);
        }
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits);
        }
        let mask = mask(n);
        Ok(PauliString {
            n,
            label: PauliLabel {
                x: label.x & mask,
                z: label.z & mask,
            },
            phase: phase & 3,
        })
    }

    pub fn identity(n: usize) -> PauliString {
        PauliString {
            n,
            label: PauliLabel::IDENTITY,
            phase: 0,
        }
    }

    /// Single-qubit letter embedded at `qubit`, phase 0.
    pub fn single(n: usize, qubit: usize, letter: Letter) -> PauliString {
        assert!(qubit < n);
        let mut label = PauliLabel::IDENTITY;
        label.set_letter(qubit, letter);
        PauliString { n, label, phase: 0 }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> PauliLabel {
        self.label
    }

    /// Phase exponent p of the global factor iᵖ.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    pub fn is_negative(&self) -> bool {
        self.phase == 2
    }

    pub fn weight(&self) -> usize {
        self.label.weight()
    }

    pub fn letter(&self, qubit: usize) -> Letter {
        self.label.letter(qubit)
    }

    /// Exact signed product self · other.
    pub fn product(&self, other: &PauliString) -> Result<PauliString> {
        if self.n != other.n {
            return Err(Error::QubitCountMismatch(self.n, other.n));
        }
        let phase = (self.phase + other.phase + self.label.mul_phase(other.label)) & 3;
        Ok(PauliString {
            n: self.n,
            label: self.label.xor(other.label),
            phase,
        })
    }

    /// True iff self · other = other · self, phases included.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::QubitCountMismatch(self.n, other.n));
        }
        Ok(self.label.commutes(other.label))
    }

    /// g · self · g†. Pauli conjugation preserves the label and flips the
    /// sign exactly when the two anticommute; the phase of g is irrelevant.
    pub fn conjugated_by(&self, g: &PauliString) -> Result<PauliString> {
        if self.n != g.n {
            return Err(Error::QubitCountMismatch(self.n, g.n));
        }
        let mut out = *self;
        if !self.label.commutes(g.label) {
            out.phase = (out.phase + 2) & 3;
        }
        Ok(out)
    }

    /// Adjoint: labels are Hermitian, so only the phase conjugates.
    pub fn adjoint(&self) -> PauliString {
        PauliString {
            phase: (4 - self.phase) & 3,
            ..*self
        }
    }

    pub fn negated(&self) -> PauliString {
        PauliString {
            phase: (self.phase + 2) & 3,
            ..*self
        }
    }

    /// Letter at qubit k moves to qubit (k + s) mod n; phase unchanged.
    /// Negative shifts rotate the other way.
    pub fn cyclic_shift(&self, s: i64) -> PauliString {
        let s = s.rem_euclid(self.n as i64) as u32;
        if s == 0 {
            return *self;
        }
        let rot = |w: u64| (w << s | w >> (self.n as u32 - s)) & mask(self.n);
        PauliString {
            n: self.n,
            label: PauliLabel {
                x: rot(self.label.x),
                z: rot(self.label.z),
            },
            phase: self.phase,
        }
    }

    /// The five cyclic shifts (by 0..n) of self.
    pub fn cyclic_orbit(&self) -> Vec<PauliString> {
        (0..self.n as i64).map(|s| self.cyclic_shift(s)).collect()
    }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses `[+-]?i?[IXYZ]+`, e.g. "IZYYZ", "-ZZZZZ", "iXY".
    fn from_str(text: &str) -> Result<PauliString> {
        let mut phase = 0u8;
        let mut chars = text.char_indices().peekable();
        if let Some(&(_, c)) = chars.peek() {
            if c == '+' || c == '-' {
                if c == '-' {
                    phase = 2;
                }
                chars.next();
            }
        }
        if let Some(&(_, c)) = chars.peek() {
            if c == 'i' {
                phase = (phase + 1) & 3;
                chars.next();
            }
        }
        let mut label = PauliLabel::IDENTITY;
        let mut n = 0usize;
        for (pos, c) in chars {
            let letter = match c {
                'I' => Letter::I,
                'X' => Letter::X,
                'Y' => Letter::Y,
                'Z' => Letter::Z,
                _ => {
                    return Err(Error::InvalidPauliChar {
                        position: pos + 1,
                        found: c,
                    })
                }
            };
            if n >= MAX_QUBITS {
                return Err(Error::TooManyQubits);
            }
            label.set_letter(n, letter);
            n += 1;
        }
        if n == 0 {
            return Err(Error::EmptyPauli);
        }
        Ok(PauliString { n, label, phase })
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase {
            0 => {}
            1 => write!(f, "i")?,
            2 => write!(f, "-")?,
            3 => write!(f, "-i")?,
            _ => unreachable!(),
        }
        for k in 0..self.n {
            write!(f, "{}", self.letter(k).to_char())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn parse_letter_encoding() {
        let a = p("IZYYZ");
        assert_eq!(a.label().x, 0b01100); // qubits 2,3 carry an X component
        assert_eq!(a.label().z, 0b11110); // qubits 1..4 carry a Z component
        assert_eq!(a.phase(), 0);
        assert_eq!(a.qubits(), 5);
    }

    #[test]
    fn parse_sign_prefixes() {
        assert_eq!(p("-ZZZZZ").phase(), 2);
        assert_eq!(p("+XX").phase(), 0);
        assert_eq!(p("iX").phase(), 1);
        assert_eq!(p("-iX").phase(), 3);
    }

    #[test]
    fn parse_rejects_bad_letter() {
        match "IXQZI".parse::<PauliString>() {
            Err(Error::InvalidPauliChar { position, found }) => {
                assert_eq!(position, 3);
                assert_eq!(found, 'Q');
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!("".parse::<PauliString>(), Err(Error::EmptyPauli)));
        assert!(matches!("-".parse::<PauliString>(), Err(Error::EmptyPauli)));
    }

    #[test]
    fn format_round_trip() {
        for s in ["IZYYZ", "-ZZZZZ", "iIXYZ", "-iYY", "X"] {
            let a = p(s);
            assert_eq!(a.to_string().parse::<PauliString>().unwrap(), a);
        }
        // every phase, a handful of labels
        for phase in 0..4 {
            for label in [PauliLabel { x: 0b101, z: 0b011 }, PauliLabel::IDENTITY] {
                let a = PauliString::new(3, label, phase).unwrap();
                assert_eq!(a.to_string().parse::<PauliString>().unwrap(), a);
            }
        }
    }

    #[test]
    fn single_qubit_products() {
        // X·Y = iZ, Y·X = -iZ, Z·X = iY, X·Z = -iY, Y·Z = iX, Z·Y = -iX
        let cases = [
            ("X", "Y", "iZ"),
            ("Y", "X", "-iZ"),
            ("Z", "X", "iY"),
            ("X", "Z", "-iY"),
            ("Y", "Z", "iX"),
            ("Z", "Y", "-iX"),
            ("X", "X", "I"),
            ("Y", "Y", "I"),
            ("Z", "Z", "I"),
        ];
        for (a, b, want) in cases {
            assert_eq!(p(a).product(&p(b)).unwrap(), p(want), "{a}·{b}");
        }
    }

    #[test]
    fn five_qubit_product() {
        // letterwise: (I)(I)=I, (Z)(X)=iY, (Y)(Z)=iX, (Y)(Z)=iX, (Z)(X)=iY, i^4 = 1
        let got = p("IZYYZ").product(&p("IXZZX")).unwrap();
        assert_eq!(got, p("IYXXY"));
        assert_eq!(got.phase(), 0);
    }

    #[test]
    fn identity_is_neutral() {
        let a = p("-iZXYYX");
        let id = PauliString::identity(5);
        assert_eq!(id.product(&a).unwrap(), a);
        assert_eq!(a.product(&id).unwrap(), a);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let a = p("XX");
        let b = p("X");
        assert!(matches!(
            a.product(&b),
            Err(Error::QubitCountMismatch(2, 1))
        ));
        assert!(matches!(
            a.commutes(&b),
            Err(Error::QubitCountMismatch(2, 1))
        ));
        assert!(matches!(
            a.conjugated_by(&b),
            Err(Error::QubitCountMismatch(2, 1))
        ));
    }

    #[test]
    fn commutation() {
        assert!(!p("X").commutes(&p("Z")).unwrap());
        // exactly two anticommuting positions (1 and 4): even parity
        assert!(p("IZYYZ").commutes(&p("ZXYYX")).unwrap());
        let a = p("IZYYZ");
        assert!(a.commutes(&a).unwrap());
    }

    #[test]
    fn weights() {
        assert_eq!(p("IZYYZ").weight(), 4);
        assert_eq!(p("IIIII").weight(), 0);
        assert_eq!(p("ZZZZZ").weight(), 5);
    }

    #[test]
    fn cyclic_shifts() {
        assert_eq!(p("IZYYZ").cyclic_shift(1), p("ZIZYY"));
        let a = p("iZXYYX");
        assert_eq!(a.cyclic_shift(5), a);
        assert_eq!(a.cyclic_shift(-1), a.cyclic_shift(4));
        let orbit = p("ZXYYX").cyclic_orbit();
        for i in 0..5 {
            for j in 0..i {
                assert_ne!(orbit[i], orbit[j], "shifts {i} and {j} coincide");
            }
        }
        for s in orbit {
            assert_eq!(s.weight(), 5);
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(p("X").conjugated_by(&p("Z")).unwrap(), p("-X"));
        let a = p("ZXYYX");
        assert_eq!(a.conjugated_by(&a).unwrap(), a);
        // one anticommuting position
        assert_eq!(p("ZZZZZ").conjugated_by(&p("XZIII")).unwrap(), p("-ZZZZZ"));
    }

    #[test]
    fn conjugation_sign_matches_commutation() {
        let strings = ["XIZYY", "YYYYY", "IIXII", "ZXYYX", "IIIII"];
        for a in strings {
            for g in strings {
                let a = p(a);
                let g = p(g);
                let c = a.conjugated_by(&g).unwrap();
                if a.commutes(&g).unwrap() {
                    assert_eq!(c, a);
                } else {
                    assert_eq!(c, a.negated());
                }
            }
        }
    }

    #[test]
    fn adjoint_phases() {
        assert_eq!(p("iX").adjoint(), p("-iX"));
        assert_eq!(p("-Y").adjoint(), p("-Y"));
        let a = p("iZXYYX");
        assert_eq!(a.product(&a.adjoint()).unwrap(), PauliString::identity(5));
    }
}
