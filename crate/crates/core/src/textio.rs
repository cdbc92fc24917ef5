//! Line-oriented text formats.
//!
//! Pauli-expansion file: one `<coefficient> <paulistring>` per line;
//! coefficients are decimals or `p/q` rationals; `#` starts a comment;
//! order-insensitive; duplicate labels are an error.
//!
//! State-vector file: `<real> <imag> <bitstring>` per nonzero amplitude.
//!
//! Stabilizer-group file: one signed Pauli string per line; coset
//! representatives on `coset:`-prefixed lines.
//!
//! Symmetry file: `perm: p0 p1 …` followed by one
//! `rot k: X->±L Y->±L Z->±L` line per qubit.

use num_complex::Complex64;

use crate::dense::StateVector;
use crate::error::{Error, Result};
use crate::expansion::{Coefficient, Exact, ExactExpansion, FloatExpansion};
use crate::pauli::{Letter, PauliString};
use crate::stabilizer::PauliGroupFile;
use crate::symmetry::{LocalRotation, SymmetryElement};

/// An expansion parsed from text: exact when every coefficient was a
/// rational or integer literal, float as soon as any line used a decimal.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedExpansion {
    Exact(ExactExpansion),
    Float(FloatExpansion),
}

impl ParsedExpansion {
    pub fn to_float(&self) -> FloatExpansion {
        match self {
            ParsedExpansion::Exact(e) => e.to_float(),
            ParsedExpansion::Float(e) => e.clone(),
        }
    }

    pub fn qubits(&self) -> usize {
        match self {
            ParsedExpansion::Exact(e) => e.qubits(),
            ParsedExpansion::Float(e) => e.qubits(),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

fn parse_exact(text: &str) -> Option<Exact> {
    match text.split_once('/') {
        Some((num, den)) => {
            let num: i64 = num.trim().parse().ok()?;
            let den: i64 = den.trim().parse().ok()?;
            if den == 0 {
                return None;
            }
            Some(Exact::from_ratio(num, den))
        }
        None => {
            let num: i64 = text.trim().parse().ok()?;
            Some(Exact::from_ratio(num, 1))
        }
    }
}

/// Parses an expansion file, staying exact when every coefficient is
/// rational.
pub fn parse_expansion(text: &str) -> Result<ParsedExpansion> {
    let mut entries: Vec<(usize, Exact, Option<f64>, PauliString)> = Vec::new();
    let mut all_exact = true;
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((coeff_text, label_text)) = line.split_once(char::is_whitespace) else {
            return Err(Error::FileFormat {
                line: lineno + 1,
                msg: "expected `<coefficient> <paulistring>`".into(),
            });
        };
        let label: PauliString = label_text.trim().parse().map_err(|e| Error::FileFormat {
            line: lineno + 1,
            msg: format!("bad pauli string: {e}"),
        })?;
        if label.phase() != 0 {
            return Err(Error::FileFormat {
                line: lineno + 1,
                msg: "labels must be unsigned; put the sign in the coefficient".into(),
            });
        }
        match parse_exact(coeff_text) {
            Some(c) => entries.push((lineno + 1, c, None, label)),
            None => {
                let c: f64 = coeff_text.trim().parse().map_err(|_| Error::FileFormat {
                    line: lineno + 1,
                    msg: format!("bad coefficient '{coeff_text}'"),
                })?;
                all_exact = false;
                entries.push((lineno + 1, Exact::zero(), Some(c), label));
            }
        }
    }
    let Some((_, _, _, first)) = entries.first() else {
        return Err(Error::FileFormat {
            line: 0,
            msg: "empty expansion file".into(),
        });
    };
    let n = first.qubits();
    for (lineno, _, _, label) in &entries {
        if label.qubits() != n {
            return Err(Error::FileFormat {
                line: *lineno,
                msg: format!("expected {n} qubits, found {}", label.qubits()),
            });
        }
    }
    if all_exact {
        let mut out = ExactExpansion::new(n);
        for (_, c, _, label) in &entries {
            if !out.coefficient(label.label()).is_zero() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            out.set(label.label(), c.clone());
        }
        Ok(ParsedExpansion::Exact(out))
    } else {
        let mut out = FloatExpansion::new(n);
        let mut seen = std::collections::BTreeSet::new();
        for (_, exact, float, label) in &entries {
            if !seen.insert(label.label()) {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            out.set(label.label(), float.unwrap_or_else(|| exact.to_f64()));
        }
        Ok(ParsedExpansion::Float(out))
    }
}

/// Writes an exact expansion with `p/q` coefficients in lowest terms,
/// ordered by weight then label.
pub fn format_exact_expansion(m: &ExactExpansion) -> String {
    let mut terms: Vec<_> = m.terms().collect();
    terms.sort_by_key(|(l, _)| (l.weight(), **l));
    let n = m.qubits();
    let mut out = String::new();
    for (label, c) in terms {
        let line = if c.denom() == &num_bigint::BigInt::from(1) {
            format!("{} {}\n", c.numer(), label.letters(n))
        } else {
            format!("{}/{} {}\n", c.numer(), c.denom(), label.letters(n))
        };
        out.push_str(&line);
    }
    out
}

/// Writes a float expansion with shortest round-trip decimals.
pub fn format_float_expansion(m: &FloatExpansion) -> String {
    let mut terms: Vec<_> = m.terms().collect();
    terms.sort_by_key(|(l, _)| (l.weight(), **l));
    let n = m.qubits();
    let mut out = String::new();
    for (label, c) in terms {
        out.push_str(&format!("{} {}\n", c, label.letters(n)));
    }
    out
}

/// Parses `<real> <imag> <bitstring>` lines into a state vector.
pub fn parse_state(text: &str) -> Result<StateVector> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::FileFormat {
                line: lineno + 1,
                msg: "expected `<real> <imag> <bitstring>`".into(),
            });
        }
        let re: f64 = fields[0].parse().map_err(|_| Error::FileFormat {
            line: lineno + 1,
            msg: format!("bad real part '{}'", fields[0]),
        })?;
        let im: f64 = fields[1].parse().map_err(|_| Error::FileFormat {
            line: lineno + 1,
            msg: format!("bad imaginary part '{}'", fields[1]),
        })?;
        entries.push((lineno + 1, re, im, fields[2].to_string()));
    }
    let Some((_, _, _, first)) = entries.first() else {
        return Err(Error::FileFormat {
            line: 0,
            msg: "empty state file".into(),
        });
    };
    let n = first.len();
    let mut v = StateVector::zero(n);
    for (lineno, re, im, bits) in &entries {
        if bits.len() != n {
            return Err(Error::FileFormat {
                line: *lineno,
                msg: format!("expected {n} bits, found {}", bits.len()),
            });
        }
        let idx = StateVector::index_of(bits).map_err(|e| Error::FileFormat {
            line: *lineno,
            msg: format!("bad bitstring: {e}"),
        })?;
        v.set_amplitude(idx, v.amplitude(idx) + Complex64::new(*re, *im));
    }
    Ok(v)
}

pub fn format_state(v: &StateVector) -> String {
    let mut out = String::new();
    for idx in 0..1usize << v.qubits() {
        let a = v.amplitude(idx);
        if a != Complex64::ZERO {
            out.push_str(&format!(
                "{} {} {}\n",
                a.re,
                a.im,
                StateVector::bits_of(idx, v.qubits())
            ));
        }
    }
    out
}

/// Parses a stabilizer-group file: signed generator lines plus optional
/// `coset:` representative lines.
pub fn parse_group_file(text: &str) -> Result<PauliGroupFile> {
    let mut generators = Vec::new();
    let mut representatives = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (target, body) = match line.strip_prefix("coset:") {
            Some(rest) => (&mut representatives, rest.trim()),
            None => (&mut generators, line),
        };
        let s: PauliString = body.parse().map_err(|e| Error::FileFormat {
            line: lineno + 1,
            msg: format!("bad pauli string: {e}"),
        })?;
        target.push(s);
    }
    Ok(PauliGroupFile {
        generators,
        representatives,
    })
}

pub fn format_group_file(group: &PauliGroupFile) -> String {
    let mut out = String::new();
    for g in &group.generators {
        out.push_str(&format!("{g}\n"));
    }
    for r in &group.representatives {
        out.push_str(&format!("coset: {r}\n"));
    }
    out
}

/// Writes a symmetry element as a `perm:` line plus one rotation line per
/// qubit.
pub fn format_symmetry(g: &SymmetryElement) -> String {
    let mut out = String::from("perm:");
    for dst in g.permutation() {
        out.push_str(&format!(" {dst}"));
    }
    out.push('\n');
    for (k, rot) in g.rotations().iter().enumerate() {
        out.push_str(&format!("rot {k}:"));
        for letter in [Letter::X, Letter::Y, Letter::Z] {
            let (image, neg) = rot.apply(letter);
            let sign = if neg { "-" } else { "+" };
            out.push_str(&format!(
                " {}->{}{}",
                letter.to_char(),
                sign,
                image.to_char()
            ));
        }
        out.push('\n');
    }
    out
}

/// Parses the symmetry text format.
pub fn parse_symmetry(text: &str) -> Result<SymmetryElement> {
    let mut perm: Option<Vec<u8>> = None;
    let mut rotations: Vec<(usize, LocalRotation)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("perm:") {
            let parsed: std::result::Result<Vec<u8>, _> =
                rest.split_whitespace().map(str::parse).collect();
            perm = Some(parsed.map_err(|_| Error::FileFormat {
                line: lineno + 1,
                msg: "bad permutation".into(),
            })?);
        } else if let Some(rest) = line.strip_prefix("rot") {
            let (qubit_text, body) = rest.split_once(':').ok_or(Error::FileFormat {
                line: lineno + 1,
                msg: "expected `rot k: …`".into(),
            })?;
            let qubit: usize = qubit_text.trim().parse().map_err(|_| Error::FileFormat {
                line: lineno + 1,
                msg: "bad qubit index".into(),
            })?;
            let mut images = [(Letter::I, false); 3];
            for field in body.split_whitespace() {
                let (src, dst) = field.split_once("->").ok_or(Error::FileFormat {
                    line: lineno + 1,
                    msg: format!("expected `L->±L`, found '{field}'"),
                })?;
                let src_letter = parse_letter(src, lineno + 1)?;
                let (neg, image_text) = match dst.strip_prefix('-') {
                    Some(rest) => (true, rest),
                    None => (false, dst.strip_prefix('+').unwrap_or(dst)),
                };
                let dst_letter = parse_letter(image_text, lineno + 1)?;
                images[letter_slot(src_letter, lineno + 1)?] = (dst_letter, neg);
            }
            let rot = LocalRotation::new(images).map_err(|e| Error::FileFormat {
                line: lineno + 1,
                msg: format!("bad rotation: {e}"),
            })?;
            rotations.push((qubit, rot));
        } else {
            return Err(Error::FileFormat {
                line: lineno + 1,
                msg: "expected `perm:` or `rot k:`".into(),
            });
        }
    }
    let perm = perm.ok_or(Error::FileFormat {
        line: 0,
        msg: "missing perm line".into(),
    })?;
    let n = perm.len();
    let mut rots = vec![LocalRotation::identity(); n];
    for (qubit, rot) in rotations {
        if qubit >= n {
            return Err(Error::FileFormat {
                line: 0,
                msg: format!("rotation qubit {qubit} out of range"),
            });
        }
        rots[qubit] = rot;
    }
    SymmetryElement::new(perm, rots)
}

fn parse_letter(text: &str, line: usize) -> Result<Letter> {
    match text.trim() {
        "X" => Ok(Letter::X),
        "Y" => Ok(Letter::Y),
        "Z" => Ok(Letter::Z),
        other => Err(Error::FileFormat {
            line,
            msg: format!("bad letter '{other}'"),
        }),
    }
}

fn letter_slot(letter: Letter, line: usize) -> Result<usize> {
    match letter {
        Letter::X => Ok(0),
        Letter::Y => Ok(1),
        Letter::Z => Ok(2),
        Letter::I => Err(Error::FileFormat {
            line,
            msg: "rotation source must be X, Y or Z".into(),
        }),
    }
}
