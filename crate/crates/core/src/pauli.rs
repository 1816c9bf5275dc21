//! n-qubit Pauli products in the symplectic binary representation.
//!
//! A `PauliString` is stored as X/Z bit vectors plus a quarter-phase
//! exponent: the operator is `i^phase · X^x[0]Z^z[0] ⊗ ... ⊗ X^x[n-1]Z^z[n-1]`.
//! All group arithmetic is exact integer arithmetic; there is no floating
//! point anywhere in this module.

use crate::bits::BitVec;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PauliError {
    #[error("pauli strings act on different qubit counts ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("qubit index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("two-qubit gate needs two distinct qubits, got {0} twice")]
    DuplicateTargets(usize),
    #[error("gate {gate:?} takes {expected} target(s), got {got}")]
    WrongTargetCount {
        gate: CliffordGate,
        expected: usize,
        got: usize,
    },
    #[error("cannot parse pauli string {0:?}")]
    Parse(String),
}

/// Single-qubit Pauli label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

/// The supported Clifford gate set. Non-Clifford gates (e.g. the π/8 gate)
/// are deliberately absent: they do not map Pauli products to Pauli products
/// and live only in the dense state-vector simulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliffordGate {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    Cnot,
    Cz,
}

impl CliffordGate {
    pub fn arity(self) -> usize {
        match self {
            CliffordGate::Cnot | CliffordGate::Cz => 2,
            _ => 1,
        }
    }
}

/// An n-qubit Pauli product with exact quarter-phase.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: BitVec,
    z: BitVec,
    /// Exponent of the global `i` prefactor, mod 4.
    phase: u8,
}

impl PauliString {
    /// The identity on `n` qubits.
    pub fn identity(n: usize) -> Self {
        PauliString {
            n,
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    /// A single Pauli operator on qubit `q` of an `n`-qubit register.
    pub fn single(n: usize, pauli: Pauli, q: usize) -> Result<Self, PauliError> {
        if q >= n {
            return Err(PauliError::IndexOutOfRange { index: q, n });
        }
        let mut p = Self::identity(n);
        match pauli {
            Pauli::I => {}
            Pauli::X => p.x.set(q, true),
            Pauli::Z => p.z.set(q, true),
            Pauli::Y => {
                // Y = i·XZ
                p.x.set(q, true);
                p.z.set(q, true);
                p.phase = 1;
            }
        }
        Ok(p)
    }

    /// Build from per-qubit labels, qubit 0 first.
    pub fn from_paulis(paulis: &[Pauli]) -> Self {
        let n = paulis.len();
        let mut p = Self::identity(n);
        for (q, &label) in paulis.iter().enumerate() {
            match label {
                Pauli::I => {}
                Pauli::X => p.x.set(q, true),
                Pauli::Z => p.z.set(q, true),
                Pauli::Y => {
                    p.x.set(q, true);
                    p.z.set(q, true);
                    p.phase = (p.phase + 1) % 4;
                }
            }
        }
        p
    }

    pub fn from_bits(x: BitVec, z: BitVec, phase: u8) -> Self {
        assert_eq!(x.len(), z.len());
        PauliString {
            n: x.len(),
            x,
            z,
            phase: phase % 4,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_bits(&self) -> &BitVec {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVec {
        &self.z
    }

    pub fn phase(&self) -> u8 {
        self.phase
    }

    /// The Pauli label at qubit `q`, ignoring the global phase.
    pub fn pauli_at(&self, q: usize) -> Pauli {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    /// Number of qubits where the operator acts as Y.
    pub fn y_count(&self) -> usize {
        self.x.count_and(&self.z)
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> usize {
        self.x.xor(&self.z).count_ones() + self.y_count()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Hermitian iff the square is +Identity, equivalently iff the phase
    /// exponent and the Y-count have equal parity.
    pub fn is_hermitian(&self) -> bool {
        (self.phase as usize + self.y_count()) % 2 == 0
    }

    /// Sign of the square: `P² = sign · I`. +1 exactly when hermitian.
    pub fn square_sign(&self) -> i8 {
        if (self.phase as usize + self.y_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// For a hermitian string, the ±1 prefactor relative to the plain
    /// tensor product of I/X/Y/Z letters.
    pub fn sign(&self) -> Option<i8> {
        if !self.is_hermitian() {
            return None;
        }
        let r = (self.phase as usize + 4 - self.y_count() % 4) % 4;
        Some(if r == 0 { 1 } else { -1 })
    }

    /// The same string multiplied by −1.
    pub fn negated(&self) -> Self {
        let mut p = self.clone();
        p.phase = (p.phase + 2) % 4;
        p
    }

    /// Exact group product `self · rhs`.
    pub fn multiply(&self, rhs: &PauliString) -> Result<PauliString, PauliError> {
        if self.n != rhs.n {
            return Err(PauliError::LengthMismatch(self.n, rhs.n));
        }
        // Z^a X^b = (-1)^{a·b} X^b Z^a per qubit, so commuting our Z block
        // past the right factor's X block picks up 2·|z_self AND x_rhs|
        // quarter turns.
        let swaps = self.z.count_and(&rhs.x);
        let phase = ((self.phase as usize + rhs.phase as usize + 2 * (swaps % 2)) % 4) as u8;
        Ok(PauliString {
            n: self.n,
            x: self.x.xor(&rhs.x),
            z: self.z.xor(&rhs.z),
            phase,
        })
    }

    /// True iff the symplectic inner product vanishes mod 2.
    pub fn commutes(&self, rhs: &PauliString) -> Result<bool, PauliError> {
        if self.n != rhs.n {
            return Err(PauliError::LengthMismatch(self.n, rhs.n));
        }
        Ok(self.x.parity_and(&rhs.z) == self.z.parity_and(&rhs.x))
    }

    /// Conjugation `U · self · U†` by a Clifford gate on the given targets.
    pub fn conjugate_clifford(
        &self,
        gate: CliffordGate,
        targets: &[usize],
    ) -> Result<PauliString, PauliError> {
        if targets.len() != gate.arity() {
            return Err(PauliError::WrongTargetCount {
                gate,
                expected: gate.arity(),
                got: targets.len(),
            });
        }
        for &t in targets {
            if t >= self.n {
                return Err(PauliError::IndexOutOfRange { index: t, n: self.n });
            }
        }
        let mut p = self.clone();
        match gate {
            CliffordGate::X => {
                let q = targets[0];
                if p.z.get(q) {
                    p.phase = (p.phase + 2) % 4;
                }
            }
            CliffordGate::Y => {
                let q = targets[0];
                if p.x.get(q) != p.z.get(q) {
                    p.phase = (p.phase + 2) % 4;
                }
            }
            CliffordGate::Z => {
                let q = targets[0];
                if p.x.get(q) {
                    p.phase = (p.phase + 2) % 4;
                }
            }
            CliffordGate::H => {
                let q = targets[0];
                let (xb, zb) = (p.x.get(q), p.z.get(q));
                if xb && zb {
                    p.phase = (p.phase + 2) % 4;
                }
                p.x.set(q, zb);
                p.z.set(q, xb);
            }
            CliffordGate::S => {
                let q = targets[0];
                if p.x.get(q) {
                    p.z.toggle(q);
                    p.phase = (p.phase + 1) % 4;
                }
            }
            CliffordGate::Sdg => {
                let q = targets[0];
                if p.x.get(q) {
                    p.z.toggle(q);
                    p.phase = (p.phase + 3) % 4;
                }
            }
            CliffordGate::Cnot => {
                let (c, t) = (targets[0], targets[1]);
                if c == t {
                    return Err(PauliError::DuplicateTargets(c));
                }
                if p.x.get(c) {
                    p.x.toggle(t);
                }
                if p.z.get(t) {
                    p.z.toggle(c);
                }
            }
            CliffordGate::Cz => {
                let (a, b) = (targets[0], targets[1]);
                if a == b {
                    return Err(PauliError::DuplicateTargets(a));
                }
                if p.x.get(a) && p.x.get(b) {
                    p.phase = (p.phase + 2) % 4;
                }
                if p.x.get(a) {
                    p.z.toggle(b);
                }
                if p.x.get(b) {
                    p.z.toggle(a);
                }
            }
        }
        Ok(p)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = (self.phase as usize + 4 - self.y_count() % 4) % 4;
        let prefix = match r {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{}", prefix)?;
        for q in 0..self.n {
            let c = match self.pauli_at(q) {
                Pauli::I => 'I',
                Pauli::X => 'X',
                Pauli::Y => 'Y',
                Pauli::Z => 'Z',
            };
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for PauliString {
    type Err = PauliError;

    /// Parse labels like `XX`, `-YY`, `+iXZ`, `-iZ`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let orig = s;
        let mut rest = s;
        let mut extra_phase = 0u8;
        if let Some(r) = rest.strip_prefix("+i").or_else(|| rest.strip_prefix("i")) {
            extra_phase = 1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix("-i") {
            extra_phase = 3;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            extra_phase = 2;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        if rest.is_empty() {
            return Err(PauliError::Parse(orig.to_string()));
        }
        let mut labels = Vec::with_capacity(rest.len());
        for c in rest.chars() {
            labels.push(match c {
                'I' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                _ => return Err(PauliError::Parse(orig.to_string())),
            });
        }
        let mut p = PauliString::from_paulis(&labels);
        p.phase = (p.phase + extra_phase) % 4;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn single_qubit_relations() {
        // X·Z = -iY
        let xz = p("X").multiply(&p("Z")).unwrap();
        assert_eq!(xz, p("-iY"));
        // Z·X = +iY
        assert_eq!(p("Z").multiply(&p("X")).unwrap(), p("iY"));
        // Y² = I
        let y2 = p("Y").multiply(&p("Y")).unwrap();
        assert_eq!(y2, PauliString::identity(1));
    }

    #[test]
    fn identity_is_neutral() {
        for s in ["X", "Y", "Z", "I"] {
            let a = p(s);
            let id = PauliString::identity(1);
            assert_eq!(id.multiply(&a).unwrap(), a);
            assert_eq!(a.multiply(&id).unwrap(), a);
        }
    }

    #[test]
    fn bell_group_element() {
        // XX · ZZ = -YY, the fourth element of the Bell stabilizer group.
        let prod = p("XX").multiply(&p("ZZ")).unwrap();
        assert_eq!(prod, p("-YY"));
    }

    #[test]
    fn commutation_examples() {
        assert!(p("XX").commutes(&p("ZZ")).unwrap());
        assert!(!p("X").commutes(&p("Z")).unwrap());
        for s in ["X", "Y", "Z", "XYZI", "-iYY"] {
            let a = p(s);
            assert!(a.commutes(&a).unwrap());
        }
    }

    #[test]
    fn hermiticity_and_sign() {
        assert!(p("Y").is_hermitian());
        assert!(p("-YY").is_hermitian());
        assert!(!p("iX").is_hermitian());
        assert_eq!(p("-YY").sign(), Some(-1));
        assert_eq!(p("XX").sign(), Some(1));
        assert_eq!(p("iX").sign(), None);
        assert_eq!(p("iX").square_sign(), -1);
    }

    #[test]
    fn conjugation_table_entries() {
        // HXH = Z, SXS† = Y
        assert_eq!(
            p("X").conjugate_clifford(CliffordGate::H, &[0]).unwrap(),
            p("Z")
        );
        assert_eq!(
            p("X").conjugate_clifford(CliffordGate::S, &[0]).unwrap(),
            p("Y")
        );
        assert_eq!(
            p("Y").conjugate_clifford(CliffordGate::S, &[0]).unwrap(),
            p("-X")
        );
        // CNOT: X_c ⊗ I_t -> X_c ⊗ X_t ; I_c ⊗ Z_t -> Z_c ⊗ Z_t
        assert_eq!(
            p("XI").conjugate_clifford(CliffordGate::Cnot, &[0, 1]).unwrap(),
            p("XX")
        );
        assert_eq!(
            p("IZ").conjugate_clifford(CliffordGate::Cnot, &[0, 1]).unwrap(),
            p("ZZ")
        );
        // CZ: X_c ⊗ I_t -> X_c ⊗ Z_t
        assert_eq!(
            p("XI").conjugate_clifford(CliffordGate::Cz, &[0, 1]).unwrap(),
            p("XZ")
        );
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            p("X").multiply(&p("XX")),
            Err(PauliError::LengthMismatch(1, 2))
        );
        assert!(matches!(
            p("XX").conjugate_clifford(CliffordGate::Cnot, &[1, 1]),
            Err(PauliError::DuplicateTargets(1))
        ));
        assert!(matches!(
            p("XX").conjugate_clifford(CliffordGate::H, &[5]),
            Err(PauliError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            p("XX").conjugate_clifford(CliffordGate::H, &[0, 1]),
            Err(PauliError::WrongTargetCount { .. })
        ));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["+XX", "-YY", "+iXZ", "-iZIY", "+IIII"] {
            let a = p(s);
            assert_eq!(format!("{}", a), s);
        }
    }
}
