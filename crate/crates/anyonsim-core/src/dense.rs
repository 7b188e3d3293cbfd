//! Dense statevector simulator used as an exact cross-check oracle for the
//! tableau engine. Capped at 14 qubits (16384 amplitudes), which covers all
//! test lattices up to 3×4 plus ancillas.

use num_complex::Complex64;

use crate::pauli::{CliffordGate, PauliString};
use crate::{Error, Result};

pub const MAX_QUBITS: usize = 14;

/// Exact 2^n-amplitude state. Qubit `q` is bit `q` of the basis index.
#[derive(Debug, Clone)]
pub struct DenseState {
    n: usize,
    amps: Vec<Complex64>,
}

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

impl DenseState {
    /// |0…0⟩ on `n` qubits.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_QUBITS {
            return Err(Error::Capacity { n, max: MAX_QUBITS });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(DenseState { n, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn apply(&mut self, gate: &CliffordGate) -> Result<()> {
        gate.check_targets(self.n)?;
        match gate {
            CliffordGate::SingleQ { q, c } => {
                // Apply the shortest {H, S} word realizing the element,
                // rightmost character first.
                for ch in c.hs_word().chars().rev() {
                    match ch {
                        'H' => self.apply_h(*q),
                        'S' => self.apply_s(*q),
                        _ => unreachable!(),
                    }
                }
            }
            CliffordGate::Cz { a, b } => {
                let (ma, mb) = (1usize << a, 1usize << b);
                for (i, amp) in self.amps.iter_mut().enumerate() {
                    if i & ma != 0 && i & mb != 0 {
                        *amp = -*amp;
                    }
                }
            }
            CliffordGate::Swap { a, b } => {
                let (ma, mb) = (1usize << a, 1usize << b);
                for i in 0..self.amps.len() {
                    let bit_a = i & ma != 0;
                    let bit_b = i & mb != 0;
                    if bit_a && !bit_b {
                        let j = (i & !ma) | mb;
                        self.amps.swap(i, j);
                    }
                }
            }
            CliffordGate::PauliRot { plus, string } => {
                let rotated = Self::pauli_applied(&self.amps, string);
                let factor = if *plus {
                    Complex64::new(0.0, SQRT_HALF)
                } else {
                    Complex64::new(0.0, -SQRT_HALF)
                };
                for (a, r) in self.amps.iter_mut().zip(rotated) {
                    *a = *a * SQRT_HALF + r * factor;
                }
            }
        }
        Ok(())
    }

    pub fn apply_all(&mut self, gates: &[CliffordGate]) -> Result<()> {
        for g in gates {
            self.apply(g)?;
        }
        Ok(())
    }

    fn apply_h(&mut self, q: usize) {
        let m = 1usize << q;
        for i in 0..self.amps.len() {
            if i & m == 0 {
                let a = self.amps[i];
                let b = self.amps[i | m];
                self.amps[i] = (a + b) * SQRT_HALF;
                self.amps[i | m] = (a - b) * SQRT_HALF;
            }
        }
    }

    fn apply_s(&mut self, q: usize) {
        let m = 1usize << q;
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & m != 0 {
                *amp *= Complex64::new(0.0, 1.0);
            }
        }
    }

    fn phase_factor(k: u8) -> Complex64 {
        match k & 3 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        }
    }

    /// `P|ψ⟩` for a phase-tracked Pauli string.
    fn pauli_applied(amps: &[Complex64], p: &PauliString) -> Vec<Complex64> {
        let (xm, zm) = p.masks();
        let x = xm.first().copied().unwrap_or(0) as usize;
        let z = zm.first().copied().unwrap_or(0) as usize;
        let global = Self::phase_factor(p.phase_exponent());
        let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
        for (b, &amp) in amps.iter().enumerate() {
            let sign = if (b & z).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            out[b ^ x] += amp * global * sign;
        }
        out
    }

    /// Apply a Pauli string as a unitary to the state.
    pub fn apply_pauli(&mut self, p: &PauliString) -> Result<()> {
        if p.num_qubits() != self.n {
            return Err(Error::Dimension(format!(
                "string on {} qubits applied to {}-qubit state",
                p.num_qubits(),
                self.n
            )));
        }
        self.amps = Self::pauli_applied(&self.amps, p);
        Ok(())
    }

    /// Exact ⟨ψ|P|ψ⟩.
    pub fn expectation(&self, p: &PauliString) -> Result<Complex64> {
        if p.num_qubits() != self.n {
            return Err(Error::Dimension(format!(
                "string on {} qubits measured on {}-qubit state",
                p.num_qubits(),
                self.n
            )));
        }
        let applied = Self::pauli_applied(&self.amps, p);
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, b) in self.amps.iter().zip(&applied) {
            acc += a.conj() * b;
        }
        Ok(acc)
    }

    /// Expectation of a Hermitian string, asserting the imaginary part is
    /// numerically zero.
    pub fn real_expectation(&self, p: &PauliString) -> Result<f64> {
        if !p.is_hermitian() {
            return Err(Error::NotHermitian(p.to_string()));
        }
        let e = self.expectation(p)?;
        debug_assert!(e.im.abs() < 1e-10, "non-real expectation {e}");
        Ok(e.re)
    }
}

/// The dense state stabilized by `gens` (all at +1), built by projecting a
/// computational basis state onto the group: an implementation-independent
/// oracle for tableau preparation.
pub fn projected_stabilizer_state(gens: &[PauliString], n: usize) -> Result<DenseState> {
    if n > MAX_QUBITS {
        return Err(Error::Capacity { n, max: MAX_QUBITS });
    }
    for seed in 0..1usize << n {
        let mut st = DenseState::new(n)?;
        st.amps.fill(Complex64::new(0.0, 0.0));
        st.amps[seed] = Complex64::new(1.0, 0.0);
        for g in gens {
            let applied = DenseState::pauli_applied(&st.amps, g);
            for (a, b) in st.amps.iter_mut().zip(applied) {
                *a = (*a + b) * 0.5;
            }
        }
        let norm2: f64 = st.amps.iter().map(|a| a.norm_sqr()).sum();
        if norm2 > 1e-9 {
            let scale = norm2.sqrt().recip();
            for a in st.amps.iter_mut() {
                *a *= scale;
            }
            return Ok(st);
        }
    }
    Err(Error::InvalidGroup(
        "no basis state overlaps the projected code space".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::{Pauli, SingleQubitClifford};

    #[test]
    fn empty_circuit_is_all_zeros() {
        let s = DenseState::new(3).unwrap();
        assert_eq!(s.amplitudes()[0], Complex64::new(1.0, 0.0));
        assert!(s.amplitudes()[1..]
            .iter()
            .all(|a| a.norm() < 1e-15));
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(DenseState::new(15).is_err());
    }

    #[test]
    fn h_then_cz_ladder_gives_graph_state_signs() {
        // H on all three, then CZ(0,1), CZ(1,2): the linear graph state.
        let mut s = DenseState::new(3).unwrap();
        for q in 0..3 {
            s.apply(&CliffordGate::h(q)).unwrap();
        }
        s.apply(&CliffordGate::Cz { a: 0, b: 1 }).unwrap();
        s.apply(&CliffordGate::Cz { a: 1, b: 2 }).unwrap();
        let norm = 8f64.sqrt().recip();
        // Sign of basis state b: (−1)^{b0 b1 + b1 b2}.
        for b in 0..8usize {
            let edges = (b & 1) * ((b >> 1) & 1) + ((b >> 1) & 1) * ((b >> 2) & 1);
            let expected = if edges % 2 == 1 { -norm } else { norm };
            let amp = s.amplitudes()[b];
            assert!((amp.re - expected).abs() < 1e-12 && amp.im.abs() < 1e-12);
        }
    }

    /// Column `j` of the dense matrix of `op` acting as a linear map.
    fn column_of(n: usize, j: usize, op: impl Fn(&mut DenseState)) -> Vec<Complex64> {
        let mut st = DenseState::new(n).unwrap();
        st.amps.fill(Complex64::new(0.0, 0.0));
        st.amps[j] = Complex64::new(1.0, 0.0);
        op(&mut st);
        st.amps
    }

    /// Asserts `conjugated(P, g)` equals `g P g†` as 2^n × 2^n matrices, by
    /// checking the phase-safe equivalent `conj · U = U · P` (the dense
    /// realization of a gate is only defined up to a global phase, which
    /// cancels when the same U appears on both sides).
    fn assert_conjugation_matches(n: usize, p: &PauliString, g: &CliffordGate) {
        let conj = p.conjugated(g).unwrap();
        for j in 0..1usize << n {
            let lhs = column_of(n, j, |st| {
                st.apply(g).unwrap();
                st.apply_pauli(&conj).unwrap();
            });
            let rhs = column_of(n, j, |st| {
                st.apply_pauli(p).unwrap();
                st.apply(g).unwrap();
            });
            for (a, b) in lhs.iter().zip(&rhs) {
                assert!(
                    (a - b).norm() < 1e-10,
                    "gate {g:?} on {p:?}: column {j} differs"
                );
            }
        }
    }

    #[test]
    fn conjugation_rules_match_matrix_action_exhaustively() {
        // Every 2-qubit Pauli string with every phase, against a gate set
        // covering all conjugation code paths.
        let gates = vec![
            CliffordGate::h(0),
            CliffordGate::s(1),
            CliffordGate::s_dagger(0),
            CliffordGate::sqrt_x(1),
            CliffordGate::sqrt_x_dagger(0),
            CliffordGate::pauli(0, Pauli::Y),
            CliffordGate::Cz { a: 0, b: 1 },
            CliffordGate::Swap { a: 0, b: 1 },
            CliffordGate::move_unitary(2, true, (0, Pauli::X), (1, Pauli::X)).unwrap(),
            CliffordGate::move_unitary(2, false, (0, Pauli::X), (1, Pauli::Z)).unwrap(),
            CliffordGate::move_unitary(2, true, (0, Pauli::Y), (1, Pauli::Z)).unwrap(),
        ];
        let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
        for g in &gates {
            for &l0 in &letters {
                for &l1 in &letters {
                    for k in 0..4u8 {
                        let base = PauliString::from_sites(2, &[(0, l0), (1, l1)]).unwrap();
                        let p = PauliString::from_masks(
                            2,
                            base.masks().0.to_vec(),
                            base.masks().1.to_vec(),
                            (base.phase_exponent() + k) & 3,
                        );
                        assert_conjugation_matches(2, &p, g);
                    }
                }
            }
        }
    }

    #[test]
    fn all_24_single_qubit_cliffords_match_their_words() {
        // Conjugation through the tableau-level images must agree with the
        // dense action of the {H,S} word for every element.
        for c in SingleQubitClifford::enumerate() {
            let g = CliffordGate::SingleQ { q: 0, c };
            for letter in [Pauli::X, Pauli::Y, Pauli::Z] {
                let p = PauliString::single(1, 0, letter).unwrap();
                assert_conjugation_matches(1, &p, &g);
            }
        }
    }

    #[test]
    fn double_move_unitary_is_conjugation_by_its_string() {
        // (U±)² acts as conjugation by τᵤτᵥ: an anticommuting p goes to
        // (τᵤτᵥ)p(τᵤτᵥ) = −p.
        let q = PauliString::from_sites(2, &[(0, Pauli::X), (1, Pauli::Z)]).unwrap();
        let u = CliffordGate::pauli_rot(true, q.clone()).unwrap();
        let p: PauliString = "ZI".parse().unwrap();
        assert!(p.anticommutes(&q).unwrap());
        let twice = p.conjugated(&u).unwrap().conjugated(&u).unwrap();
        let qpq = q.mul(&p).unwrap().mul(&q).unwrap();
        assert_eq!(twice, qpq);
        assert_eq!(twice, p.clone().negated());
        // And densely.
        for j in 0..4usize {
            let lhs = column_of(2, j, |st| {
                st.apply(&u).unwrap();
                st.apply(&u).unwrap();
            });
            let rhs = column_of(2, j, |st| {
                // exp(iπ/2 Q) = iQ, so the double move is Q up to global phase.
                st.apply_pauli(&q).unwrap();
            });
            // Compare up to the global phase i.
            let phase = Complex64::new(0.0, 1.0);
            for (a, b) in lhs.iter().zip(&rhs) {
                assert!((a - b * phase).norm() < 1e-10);
            }
        }
    }
}
