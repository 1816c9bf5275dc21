//! Dense state-vector simulation for small qubit counts.
//!
//! This is the exact oracle the rest of the crate is validated against:
//! every gate is an explicit matrix action on the amplitude tensor, and
//! measurements follow the Born rule with projectors `(I ± A)/2`.
//!
//! Qubit `j` is bit `j` of the amplitude index (little-endian). This mapping
//! is fixed; the tableau and graph-state modules rely on it.

use crate::pauli::{CliffordGate, PauliString};
use num_complex::Complex64;
use rand::Rng;
use thiserror::Error;

/// Hard cap on the qubit count; 2^22 amplitudes is 64 MiB.
pub const MAX_QUBITS: usize = 22;

#[derive(Debug, Error, PartialEq)]
pub enum StateVecError {
    #[error("{0} qubits exceeds the state-vector cap of {MAX_QUBITS}")]
    TooManyQubits(usize),
    #[error("amplitude vector has length {got}, expected 2^{n}")]
    BadLength { got: usize, n: usize },
    #[error("qubit index {index} out of range for {n} qubits")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("two-qubit gate needs two distinct qubits, got {0} twice")]
    DuplicateTargets(usize),
    #[error("gate takes {expected} target(s), got {got}")]
    WrongTargetCount { expected: usize, got: usize },
    #[error("state vectors act on different qubit counts ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("observable is not hermitian")]
    NotHermitian,
    #[error("projection onto a branch of probability zero")]
    ImpossibleBranch,
}

/// A dense complex state on `n` qubits. Not necessarily normalized; bras
/// used for overlaps are allowed to carry arbitrary weights.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |0...0⟩ on `n` qubits.
    pub fn zero_state(n: usize) -> Result<Self, StateVecError> {
        let mut s = Self::uniform_zero(n)?;
        s.amps[0] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    /// |+⟩^⊗n.
    pub fn plus_state(n: usize) -> Result<Self, StateVecError> {
        let mut s = Self::uniform_zero(n)?;
        let a = Complex64::new(1.0 / (s.amps.len() as f64).sqrt(), 0.0);
        s.amps.fill(a);
        Ok(s)
    }

    /// Computational basis state |index⟩.
    pub fn basis_state(n: usize, index: usize) -> Result<Self, StateVecError> {
        let mut s = Self::uniform_zero(n)?;
        assert!(index < s.amps.len());
        s.amps[index] = Complex64::new(1.0, 0.0);
        Ok(s)
    }

    fn uniform_zero(n: usize) -> Result<Self, StateVecError> {
        if n > MAX_QUBITS {
            return Err(StateVecError::TooManyQubits(n));
        }
        Ok(StateVector {
            n,
            amps: vec![Complex64::new(0.0, 0.0); 1 << n],
        })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self, StateVecError> {
        if n > MAX_QUBITS {
            return Err(StateVecError::TooManyQubits(n));
        }
        if amps.len() != 1 << n {
            return Err(StateVecError::BadLength { got: amps.len(), n });
        }
        Ok(StateVector { n, amps })
    }

    /// Tensor product of single-qubit factors; qubit `j` gets `factors[j]`
    /// with `factors[j][b]` the amplitude on |b⟩.
    pub fn product_state(factors: &[[Complex64; 2]]) -> Result<Self, StateVecError> {
        let n = factors.len();
        if n > MAX_QUBITS {
            return Err(StateVecError::TooManyQubits(n));
        }
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for f in factors {
            let mut next = Vec::with_capacity(amps.len() * 2);
            for b in 0..2usize {
                for a in &amps {
                    next.push(*a * f[b]);
                }
            }
            // interleave so that the new qubit is the highest bit
            amps = next;
        }
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            let inv = 1.0 / n;
            for a in &mut self.amps {
                *a *= inv;
            }
        }
    }

    fn check_target(&self, q: usize) -> Result<(), StateVecError> {
        if q >= self.n {
            Err(StateVecError::IndexOutOfRange { index: q, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Apply an arbitrary 2×2 matrix to qubit `q` (row-major: m[row][col]).
    pub fn apply_single(&mut self, q: usize, m: &[[Complex64; 2]; 2]) -> Result<(), StateVecError> {
        self.check_target(q)?;
        let bit = 1usize << q;
        for idx in 0..self.amps.len() {
            if idx & bit == 0 {
                let a0 = self.amps[idx];
                let a1 = self.amps[idx | bit];
                self.amps[idx] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[idx | bit] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
        Ok(())
    }

    /// Apply a Clifford gate from the shared gate set.
    pub fn apply_clifford(
        &mut self,
        gate: CliffordGate,
        targets: &[usize],
    ) -> Result<(), StateVecError> {
        let expected = gate.arity();
        if targets.len() != expected {
            return Err(StateVecError::WrongTargetCount {
                expected,
                got: targets.len(),
            });
        }
        for &t in targets {
            self.check_target(t)?;
        }
        let i = Complex64::i();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        match gate {
            CliffordGate::X => {
                let m = [[zero, one], [one, zero]];
                self.apply_single(targets[0], &m)
            }
            CliffordGate::Y => {
                let m = [[zero, -i], [i, zero]];
                self.apply_single(targets[0], &m)
            }
            CliffordGate::Z => {
                let m = [[one, zero], [zero, -one]];
                self.apply_single(targets[0], &m)
            }
            CliffordGate::H => {
                let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                let m = [[h, h], [h, -h]];
                self.apply_single(targets[0], &m)
            }
            CliffordGate::S => {
                let m = [[one, zero], [zero, i]];
                self.apply_single(targets[0], &m)
            }
            CliffordGate::Sdg => {
                let m = [[one, zero], [zero, -i]];
                self.apply_single(targets[0], &m)
            }
            CliffordGate::Cnot => {
                let (c, t) = (targets[0], targets[1]);
                if c == t {
                    return Err(StateVecError::DuplicateTargets(c));
                }
                let (cb, tb) = (1usize << c, 1usize << t);
                for idx in 0..self.amps.len() {
                    if idx & cb != 0 && idx & tb == 0 {
                        self.amps.swap(idx, idx | tb);
                    }
                }
                Ok(())
            }
            CliffordGate::Cz => {
                let (a, b) = (targets[0], targets[1]);
                if a == b {
                    return Err(StateVecError::DuplicateTargets(a));
                }
                let (ab, bb) = (1usize << a, 1usize << b);
                for idx in 0..self.amps.len() {
                    if idx & ab != 0 && idx & bb != 0 {
                        self.amps[idx] = -self.amps[idx];
                    }
                }
                Ok(())
            }
        }
    }

    /// Z rotation `e^{-iθZ/2}` on qubit `q`. θ = π/4 is the π/8 gate.
    pub fn apply_z_rotation(&mut self, q: usize, theta: f64) -> Result<(), StateVecError> {
        let m = [
            [Complex64::from_polar(1.0, -theta / 2.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::from_polar(1.0, theta / 2.0)],
        ];
        self.apply_single(q, &m)
    }

    /// X rotation `e^{-iθX/2}` on qubit `q`.
    pub fn apply_x_rotation(&mut self, q: usize, theta: f64) -> Result<(), StateVecError> {
        let c = Complex64::new((theta / 2.0).cos(), 0.0);
        let s = Complex64::new(0.0, -(theta / 2.0).sin());
        let m = [[c, s], [s, c]];
        self.apply_single(q, &m)
    }

    /// Multiply by a Pauli string (including its phase).
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<(), StateVecError> {
        if p.n() != self.n {
            return Err(StateVecError::LengthMismatch(p.n(), self.n));
        }
        let xm = p.x_bits().as_u64() as usize;
        let zm = p.z_bits().as_u64() as usize;
        let global = match p.phase() {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::i(),
            2 => Complex64::new(-1.0, 0.0),
            _ => -Complex64::i(),
        };
        // X^x Z^z |b⟩ = (-1)^{popcount(z AND b)} |b XOR x⟩
        if xm == 0 {
            for (idx, a) in self.amps.iter_mut().enumerate() {
                let sign = if (idx & zm).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                *a *= global * sign;
            }
        } else {
            for idx in 0..self.amps.len() {
                let j = idx ^ xm;
                if idx < j {
                    let si = if (idx & zm).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                    let sj = if (j & zm).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
                    let ai = self.amps[idx];
                    let aj = self.amps[j];
                    self.amps[j] = global * si * ai;
                    self.amps[idx] = global * sj * aj;
                }
            }
        }
        Ok(())
    }

    /// Born probability of outcome +1 for a hermitian Pauli observable.
    pub fn born_probability(&self, observable: &PauliString) -> Result<f64, StateVecError> {
        if !observable.is_hermitian() {
            return Err(StateVecError::NotHermitian);
        }
        let mut pv = self.clone();
        pv.apply_pauli(observable)?;
        let mut p_plus = 0.0;
        for (a, b) in self.amps.iter().zip(pv.amps.iter()) {
            p_plus += ((a + b) * 0.5).norm_sqr();
        }
        Ok(p_plus)
    }

    /// Project onto the ±1 eigenspace of a hermitian Pauli observable and
    /// renormalize. Returns the Born probability of that branch.
    pub fn project(&mut self, observable: &PauliString, outcome: i8) -> Result<f64, StateVecError> {
        if !observable.is_hermitian() {
            return Err(StateVecError::NotHermitian);
        }
        let mut pv = self.clone();
        pv.apply_pauli(observable)?;
        let sign = if outcome >= 0 { 1.0 } else { -1.0 };
        let mut prob = 0.0;
        for (a, b) in self.amps.iter_mut().zip(pv.amps.iter()) {
            *a = (*a + sign * b) * 0.5;
            prob += a.norm_sqr();
        }
        if prob < 1e-24 {
            return Err(StateVecError::ImpossibleBranch);
        }
        let inv = 1.0 / prob.sqrt();
        for a in &mut self.amps {
            *a *= inv;
        }
        Ok(prob)
    }

    /// Sample a projective measurement of a hermitian Pauli observable.
    pub fn measure(
        &mut self,
        observable: &PauliString,
        rng: &mut impl Rng,
    ) -> Result<i8, StateVecError> {
        let p_plus = self.born_probability(observable)?;
        let outcome = if rng.random::<f64>() < p_plus { 1 } else { -1 };
        self.project(observable, outcome)?;
        Ok(outcome)
    }

    /// Inner product ⟨self|other⟩ = Σ conj(self_i)·other_i.
    pub fn overlap(&self, other: &StateVector) -> Result<Complex64, StateVecError> {
        if self.n != other.n {
            return Err(StateVecError::LengthMismatch(self.n, other.n));
        }
        Ok(self
            .amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// |⟨self|other⟩| for normalized states: 1 means equal up to phase.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64, StateVecError> {
        Ok(self.overlap(other)?.norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::Pauli;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hadamard_makes_plus() {
        let mut s = StateVector::zero_state(1).unwrap();
        s.apply_clifford(CliffordGate::H, &[0]).unwrap();
        let plus = StateVector::plus_state(1).unwrap();
        assert!((s.fidelity(&plus).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cz_on_plus_plus_is_edge_graph_state() {
        let mut s = StateVector::plus_state(2).unwrap();
        s.apply_clifford(CliffordGate::Cz, &[0, 1]).unwrap();
        // stabilized by XZ and ZX
        for gen in ["XZ", "ZX"] {
            let g: PauliString = gen.parse().unwrap();
            let mut t = s.clone();
            t.apply_pauli(&g).unwrap();
            assert!((s.overlap(&t).unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_angle_rotation_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let amps: Vec<Complex64> = (0..8).map(|_| c(rng.random(), rng.random())).collect();
        let s = StateVector::from_amplitudes(3, amps).unwrap();
        let mut t = s.clone();
        t.apply_z_rotation(1, 0.0).unwrap();
        for (a, b) in s.amplitudes().iter().zip(t.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn gates_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let amps: Vec<Complex64> = (0..16).map(|_| c(rng.random(), rng.random())).collect();
        let mut s = StateVector::from_amplitudes(4, amps).unwrap();
        s.normalize();
        let gates: Vec<(CliffordGate, Vec<usize>)> = vec![
            (CliffordGate::H, vec![0]),
            (CliffordGate::S, vec![1]),
            (CliffordGate::Sdg, vec![2]),
            (CliffordGate::X, vec![3]),
            (CliffordGate::Y, vec![0]),
            (CliffordGate::Z, vec![1]),
            (CliffordGate::Cnot, vec![0, 2]),
            (CliffordGate::Cz, vec![1, 3]),
        ];
        for (g, ts) in gates {
            s.apply_clifford(g, &ts).unwrap();
            assert!((s.norm() - 1.0).abs() < 1e-12);
        }
        s.apply_z_rotation(0, 0.789).unwrap();
        s.apply_x_rotation(2, -1.23).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn measure_plus_in_x_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut s = StateVector::plus_state(1).unwrap();
        let x = PauliString::single(1, Pauli::X, 0).unwrap();
        assert!((s.born_probability(&x).unwrap() - 1.0).abs() < 1e-12);
        let outcome = s.measure(&x, &mut rng).unwrap();
        assert_eq!(outcome, 1);
        let plus = StateVector::plus_state(1).unwrap();
        assert!((s.fidelity(&plus).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bell_z_measurement_is_fair() {
        let mut s = StateVector::zero_state(2).unwrap();
        s.apply_clifford(CliffordGate::H, &[0]).unwrap();
        s.apply_clifford(CliffordGate::Cnot, &[0, 1]).unwrap();
        let z0 = PauliString::single(2, Pauli::Z, 0).unwrap();
        assert!((s.born_probability(&z0).unwrap() - 0.5).abs() < 1e-12);
        // After projecting onto -1, the state is |11⟩.
        let mut t = s.clone();
        t.project(&z0, -1).unwrap();
        let expect = StateVector::basis_state(2, 3).unwrap();
        assert!((t.fidelity(&expect).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn overlap_with_cat_state() {
        // ⟨00...0|cat⟩ = 1/√2
        let n = 5;
        let dim = 1 << n;
        let mut amps = vec![c(0.0, 0.0); dim];
        amps[0] = c(1.0 / 2f64.sqrt(), 0.0);
        amps[dim - 1] = c(1.0 / 2f64.sqrt(), 0.0);
        let cat = StateVector::from_amplitudes(n, amps).unwrap();
        let zero = StateVector::zero_state(n).unwrap();
        let ov = zero.overlap(&cat).unwrap();
        assert!((ov - c(1.0 / 2f64.sqrt(), 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            StateVector::zero_state(MAX_QUBITS + 1),
            Err(StateVecError::TooManyQubits(MAX_QUBITS + 1))
        );
    }

    #[test]
    fn impossible_branch_is_an_error() {
        let mut s = StateVector::plus_state(1).unwrap();
        let x = PauliString::single(1, Pauli::X, 0).unwrap();
        assert_eq!(s.project(&x, -1), Err(StateVecError::ImpossibleBranch));
    }

    #[test]
    fn product_state_matches_tensor_order() {
        // qubit 0 in |1⟩, qubit 1 in |0⟩ -> index 0b01
        let one = [c(0.0, 0.0), c(1.0, 0.0)];
        let zero = [c(1.0, 0.0), c(0.0, 0.0)];
        let s = StateVector::product_state(&[one, zero]).unwrap();
        assert!((s.amplitudes()[0b01] - c(1.0, 0.0)).norm() < 1e-15);
    }
}
