//! Tableau simulation of Clifford circuits on states with k ≥ 0 logical
//! qubits: exact Pauli-string expectations, projective measurement with
//! seeded randomness, and symplectic completion of generating sets.
//!
//! Destabilizers are stored so measurement collapse is O(n·w) instead of
//! re-elimination; a k = 0 tableau is a pure state, k > 0 represents the
//! uniform mixture over the code space of its stabilizer group.

use rand::Rng;

use crate::pauli::{CliffordGate, Pauli, PauliString};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct StabilizerTableau {
    n: usize,
    stabs: Vec<PauliString>,
    destabs: Vec<PauliString>,
    /// Anticommuting completion pairs (X-like, Z-like) for the k logical qubits.
    logicals: Vec<(PauliString, PauliString)>,
}

/// Outcome of one projective Pauli measurement.
#[derive(Debug, Clone)]
pub struct MeasurementRecord {
    pub string: PauliString,
    pub outcome: i8,
    pub deterministic: bool,
    pub shot_index: u64,
}

impl StabilizerTableau {
    /// |0…0⟩ on `n` qubits.
    pub fn zero_state(n: usize) -> Self {
        let stabs = (0..n)
            .map(|q| PauliString::single(n, q, Pauli::Z).unwrap())
            .collect();
        let destabs = (0..n)
            .map(|q| PauliString::single(n, q, Pauli::X).unwrap())
            .collect();
        StabilizerTableau {
            n,
            stabs,
            destabs,
            logicals: Vec::new(),
        }
    }

    /// Builds the tableau stabilized by `gens` (all +1), completing
    /// destabilizers and logical pairs canonically over GF(2).
    pub fn from_generators(gens: &[PauliString], n: usize) -> Result<Self> {
        if gens.len() > n {
            return Err(Error::InvalidGroup(format!(
                "{} generators exceed {n} qubits",
                gens.len()
            )));
        }
        for g in gens {
            if g.num_qubits() != n {
                return Err(Error::Dimension(format!(
                    "generator {g} is not on {n} qubits"
                )));
            }
            if !g.is_hermitian() {
                return Err(Error::NotHermitian(g.to_string()));
            }
            if g.is_identity_letters() {
                return Err(Error::InvalidGroup("identity generator".into()));
            }
        }
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if a.anticommutes(b)? {
                    return Err(Error::InvalidGroup(format!(
                        "generators anticommute: {a} vs {b}"
                    )));
                }
            }
        }
        if gf2_rank(gens) != gens.len() {
            return Err(Error::InvalidGroup("generators are dependent".into()));
        }

        // Symplectic Gram-Schmidt with lowest-index pivoting. The candidate
        // pool of single-qubit X and Z operators spans the full group, so a
        // destabilizer partner always exists for an independent generator.
        let mut pool: Vec<PauliString> = (0..n)
            .map(|q| PauliString::single(n, q, Pauli::X).unwrap())
            .chain((0..n).map(|q| PauliString::single(n, q, Pauli::Z).unwrap()))
            .collect();
        let mut queue: std::collections::VecDeque<PauliString> =
            gens.iter().cloned().collect();
        let mut stabs = Vec::with_capacity(gens.len());
        let mut destabs = Vec::with_capacity(gens.len());
        while let Some(v) = queue.pop_front() {
            let idx = pool
                .iter()
                .position(|w| v.anticommutes(w).unwrap())
                .ok_or_else(|| Error::InvalidGroup(format!("no partner for {v}")))?;
            let w = pool.remove(idx);
            for u in pool.iter_mut().chain(queue.iter_mut()) {
                let hits_w = u.anticommutes(&w).unwrap();
                let hits_v = u.anticommutes(&v).unwrap();
                if hits_w {
                    *u = u.mul(&v).unwrap();
                }
                if hits_v {
                    *u = u.mul(&w).unwrap();
                }
            }
            stabs.push(v);
            destabs.push(w.canonicalized_hermitian());
        }

        // Pair up what remains of the pool into logical (X, Z) pairs;
        // elements central in the remaining span have become redundant.
        let mut logicals = Vec::new();
        while let Some(v) = pool.iter().position(|p| !p.is_identity_letters()) {
            let v = pool.remove(v);
            let Some(idx) = pool.iter().position(|w| v.anticommutes(w).unwrap()) else {
                continue;
            };
            let w = pool.remove(idx);
            for u in pool.iter_mut() {
                let hits_w = u.anticommutes(&w).unwrap();
                let hits_v = u.anticommutes(&v).unwrap();
                if hits_w {
                    *u = u.mul(&v).unwrap();
                }
                if hits_v {
                    *u = u.mul(&w).unwrap();
                }
            }
            logicals.push((
                v.canonicalized_hermitian(),
                w.canonicalized_hermitian(),
            ));
        }
        debug_assert_eq!(logicals.len(), n - gens.len());

        let t = StabilizerTableau {
            n,
            stabs,
            destabs,
            logicals,
        };
        debug_assert!(t.validate().is_ok());
        Ok(t)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn num_logical(&self) -> usize {
        self.n - self.stabs.len()
    }

    pub fn stabilizers(&self) -> &[PauliString] {
        &self.stabs
    }

    pub fn destabilizers(&self) -> &[PauliString] {
        &self.destabs
    }

    pub fn logical_pairs(&self) -> &[(PauliString, PauliString)] {
        &self.logicals
    }

    /// Replaces every stored generator by its conjugate under `g`.
    pub fn apply(&mut self, gate: &CliffordGate) -> Result<()> {
        gate.check_targets(self.n)?;
        for s in self.stabs.iter_mut().chain(self.destabs.iter_mut()) {
            *s = s.conjugated(gate)?;
        }
        for (x, z) in self.logicals.iter_mut() {
            *x = x.conjugated(gate)?;
            *z = z.conjugated(gate)?;
        }
        Ok(())
    }

    pub fn apply_all(&mut self, gates: &[CliffordGate]) -> Result<()> {
        for g in gates {
            self.apply(g)?;
        }
        Ok(())
    }

    /// Exact expectation of a Hermitian string: 0 if it anticommutes with any
    /// stabilizer or carries logical support, else ±1 by GF(2) elimination
    /// against the group with exact sign accumulation.
    pub fn expectation(&self, p: &PauliString) -> Result<i8> {
        if p.num_qubits() != self.n {
            return Err(Error::Dimension(format!(
                "string on {} qubits against {}-qubit tableau",
                p.num_qubits(),
                self.n
            )));
        }
        if !p.is_hermitian() {
            return Err(Error::NotHermitian(p.to_string()));
        }
        for s in &self.stabs {
            if p.anticommutes(s)? {
                return Ok(0);
            }
        }
        let mut acc = PauliString::identity(self.n);
        for (i, d) in self.destabs.iter().enumerate() {
            if p.anticommutes(d)? {
                acc = acc.mul(&self.stabs[i])?;
            }
        }
        if !acc.same_letters(p) {
            return Ok(0);
        }
        match (4 + p.phase_exponent() - acc.phase_exponent()) & 3 {
            0 => Ok(1),
            2 => Ok(-1),
            d => unreachable!("odd phase difference {d} between Hermitian strings"),
        }
    }

    /// Projective measurement with state collapse for random outcomes.
    pub fn measure<R: Rng>(
        &mut self,
        p: &PauliString,
        rng: &mut R,
        shot_index: u64,
    ) -> Result<MeasurementRecord> {
        if !p.is_hermitian() {
            return Err(Error::NotHermitian(p.to_string()));
        }
        let anti: Vec<usize> = (0..self.stabs.len())
            .filter(|&i| p.anticommutes(&self.stabs[i]).unwrap())
            .collect();
        if let Some(&a) = anti.first() {
            let outcome: i8 = if rng.gen::<bool>() { 1 } else { -1 };
            let pivot = self.stabs[a].clone();
            for &i in &anti[1..] {
                self.stabs[i] = self.stabs[i].mul(&pivot)?;
            }
            for d in self.destabs.iter_mut() {
                if p.anticommutes(d)? {
                    *d = d.mul(&pivot)?;
                }
            }
            for (x, z) in self.logicals.iter_mut() {
                if p.anticommutes(x)? {
                    *x = x.mul(&pivot)?;
                }
                if p.anticommutes(z)? {
                    *z = z.mul(&pivot)?;
                }
            }
            self.destabs[a] = pivot;
            self.stabs[a] = if outcome == 1 {
                p.clone()
            } else {
                p.clone().negated()
            };
            return Ok(MeasurementRecord {
                string: p.clone(),
                outcome,
                deterministic: false,
                shot_index,
            });
        }
        match self.expectation(p)? {
            0 => {
                // Commutes with the group but carries logical support: the
                // outcome is uniformly random and the measurement promotes a
                // new stabilizer, consuming one logical pair.
                let outcome: i8 = if rng.gen::<bool>() { 1 } else { -1 };
                let signed = if outcome == 1 {
                    p.clone()
                } else {
                    p.clone().negated()
                };
                let mut gens = self.stabs.clone();
                gens.push(signed);
                *self = StabilizerTableau::from_generators(&gens, self.n)?;
                Ok(MeasurementRecord {
                    string: p.clone(),
                    outcome,
                    deterministic: false,
                    shot_index,
                })
            }
            v => Ok(MeasurementRecord {
                string: p.clone(),
                outcome: v,
                deterministic: true,
                shot_index,
            }),
        }
    }

    /// Checks every group invariant; used after each protocol step in tests.
    pub fn validate(&self) -> Result<()> {
        let m = self.stabs.len();
        if self.destabs.len() != m {
            return Err(Error::Validation("destabilizer count mismatch".into()));
        }
        if self.logicals.len() != self.n - m {
            return Err(Error::Validation("logical pair count mismatch".into()));
        }
        for (i, s) in self.stabs.iter().enumerate() {
            if !s.is_hermitian() {
                return Err(Error::Validation(format!("stabilizer {i} not Hermitian")));
            }
            for (j, t) in self.stabs.iter().enumerate().skip(i + 1) {
                if s.anticommutes(t)? {
                    return Err(Error::Validation(format!(
                        "stabilizers {i} and {j} anticommute"
                    )));
                }
            }
        }
        if gf2_rank(&self.stabs) != m {
            return Err(Error::Validation("stabilizers dependent".into()));
        }
        for (i, d) in self.destabs.iter().enumerate() {
            for (j, s) in self.stabs.iter().enumerate() {
                let anti = d.anticommutes(s)?;
                if anti != (i == j) {
                    return Err(Error::Validation(format!(
                        "destabilizer {i} pairing violated at stabilizer {j}"
                    )));
                }
            }
            for (j, e) in self.destabs.iter().enumerate().skip(i + 1) {
                if d.anticommutes(e)? {
                    return Err(Error::Validation(format!(
                        "destabilizers {i} and {j} anticommute"
                    )));
                }
            }
        }
        for (i, (x, z)) in self.logicals.iter().enumerate() {
            if x.commutes(z)? {
                return Err(Error::Validation(format!("logical pair {i} commutes")));
            }
            for (j, other) in self.stabs.iter().chain(self.destabs.iter()).enumerate() {
                if x.anticommutes(other)? || z.anticommutes(other)? {
                    return Err(Error::Validation(format!(
                        "logical pair {i} fails to commute with generator row {j}"
                    )));
                }
            }
            for (j, (ox, oz)) in self.logicals.iter().enumerate() {
                if i == j {
                    continue;
                }
                if x.anticommutes(ox)? || x.anticommutes(oz)? || z.anticommutes(ox)? || z.anticommutes(oz)? {
                    return Err(Error::Validation(format!(
                        "logical pairs {i} and {j} overlap"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Text dump: header `n=<n> k=<k>`, then stabilizers, destabilizers, and
    /// logical pairs one per line.
    pub fn dump(&self) -> String {
        let mut out = format!("n={} k={}\n", self.n, self.num_logical());
        for s in &self.stabs {
            out.push_str(&format!("{s}\n"));
        }
        for d in &self.destabs {
            out.push_str(&format!("{d}\n"));
        }
        for (x, z) in &self.logicals {
            out.push_str(&format!("{x}\n{z}\n"));
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty tableau dump".into()))?;
        let mut n = None;
        let mut k = None;
        for tok in header.split_whitespace() {
            if let Some(v) = tok.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            } else if let Some(v) = tok.strip_prefix("k=") {
                k = v.parse::<usize>().ok();
            }
        }
        let (n, k) = match (n, k) {
            (Some(n), Some(k)) if k <= n => (n, k),
            _ => return Err(Error::Parse(format!("bad tableau header '{header}'"))),
        };
        let m = n - k;
        let mut parse = |label: &str| -> Result<PauliString> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing {label} line")))?;
            let p: PauliString = line.parse()?;
            if p.num_qubits() != n {
                return Err(Error::Parse(format!("{label} line has wrong width")));
            }
            Ok(p)
        };
        let stabs: Vec<_> = (0..m)
            .map(|i| parse(&format!("stabilizer {i}")))
            .collect::<Result<_>>()?;
        let destabs: Vec<_> = (0..m)
            .map(|i| parse(&format!("destabilizer {i}")))
            .collect::<Result<_>>()?;
        let logicals: Vec<_> = (0..k)
            .map(|i| {
                Ok((
                    parse(&format!("logical X {i}"))?,
                    parse(&format!("logical Z {i}"))?,
                ))
            })
            .collect::<Result<_>>()?;
        let t = StabilizerTableau {
            n,
            stabs,
            destabs,
            logicals,
        };
        t.validate()?;
        Ok(t)
    }
}

/// Rank of the x/z masks over GF(2).
pub fn gf2_rank(rows: &[PauliString]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut vecs: Vec<Vec<u64>> = rows
        .iter()
        .map(|p| {
            let (x, z) = p.masks();
            x.iter().chain(z.iter()).copied().collect()
        })
        .collect();
    let words = vecs[0].len();
    let mut rank = 0;
    for bit in 0..words * 64 {
        let (w, b) = (bit / 64, bit % 64);
        let Some(pivot) = (rank..vecs.len()).find(|&r| vecs[r][w] >> b & 1 == 1) else {
            continue;
        };
        vecs.swap(rank, pivot);
        for r in 0..vecs.len() {
            if r != rank && vecs[r][w] >> b & 1 == 1 {
                let (head, tail) = vecs.split_at_mut(rank.max(r));
                let (a, bvec) = if r > rank {
                    (&head[rank], &mut tail[0])
                } else {
                    (&tail[0], &mut head[r])
                };
                for i in 0..words {
                    bvec[i] ^= a[i];
                }
            }
        }
        rank += 1;
        if rank == vecs.len() {
            break;
        }
    }
    rank
}

/// Echelonized GF(2) span of a generator set's x/z masks, with combination
/// tracking so membership queries also return which generators multiply to
/// the queried masks.
pub struct Gf2Span {
    rows: Vec<(Vec<u64>, Vec<bool>)>,
    gens: usize,
}

impl Gf2Span {
    fn row_of(p: &PauliString) -> Vec<u64> {
        let (x, z) = p.masks();
        x.iter().chain(z.iter()).copied().collect()
    }

    fn leading_bit(row: &[u64]) -> Option<usize> {
        row.iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn new(gens: &[PauliString]) -> Self {
        let mut span = Gf2Span {
            rows: Vec::new(),
            gens: gens.len(),
        };
        for (i, g) in gens.iter().enumerate() {
            let mut row = Self::row_of(g);
            let mut combo = vec![false; gens.len()];
            combo[i] = true;
            span.reduce(&mut row, &mut combo);
            if row.iter().any(|w| *w != 0) {
                span.rows.push((row, combo));
                span.rows
                    .sort_by_key(|(r, _)| Self::leading_bit(r).unwrap_or(usize::MAX));
            }
        }
        span
    }

    fn reduce(&self, row: &mut [u64], combo: &mut [bool]) {
        for (b, c) in &self.rows {
            if let Some(bit) = Self::leading_bit(b) {
                if row[bit / 64] >> (bit % 64) & 1 == 1 {
                    for (r, s) in row.iter_mut().zip(b) {
                        *r ^= s;
                    }
                    for (r, s) in combo.iter_mut().zip(c) {
                        *r ^= *s;
                    }
                }
            }
        }
    }

    /// When `p`'s masks lie in the span, returns the generator combination.
    pub fn solve(&self, p: &PauliString) -> Option<Vec<bool>> {
        let mut row = Self::row_of(p);
        let mut combo = vec![false; self.gens];
        self.reduce(&mut row, &mut combo);
        row.iter().all(|w| *w == 0).then_some(combo)
    }

    pub fn contains_masks(&self, p: &PauliString) -> bool {
        self.solve(p).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::DenseState;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn zgen(n: usize, q: usize) -> PauliString {
        PauliString::single(n, q, Pauli::Z).unwrap()
    }

    #[test]
    fn zero_state_from_generators() {
        let gens: Vec<_> = (0..4).map(|q| zgen(4, q)).collect();
        let t = StabilizerTableau::from_generators(&gens, 4).unwrap();
        assert_eq!(t.num_logical(), 0);
        for q in 0..4 {
            assert_eq!(t.expectation(&zgen(4, q)).unwrap(), 1);
            let x = PauliString::single(4, q, Pauli::X).unwrap();
            assert_eq!(t.expectation(&x).unwrap(), 0);
        }
    }

    #[test]
    fn bell_state_from_generators() {
        let xx: PauliString = "XX".parse().unwrap();
        let zz: PauliString = "ZZ".parse().unwrap();
        let t = StabilizerTableau::from_generators(&[xx.clone(), zz.clone()], 2).unwrap();
        assert_eq!(t.num_logical(), 0);
        assert_eq!(t.expectation(&xx).unwrap(), 1);
        assert_eq!(t.expectation(&zz).unwrap(), 1);
        let yy: PauliString = "YY".parse().unwrap();
        assert_eq!(t.expectation(&yy).unwrap(), -1);
        assert_eq!(t.expectation(&"ZI".parse().unwrap()).unwrap(), 0);
    }

    #[test]
    fn invalid_groups_are_rejected() {
        let x: PauliString = "XI".parse().unwrap();
        let z: PauliString = "ZI".parse().unwrap();
        assert!(matches!(
            StabilizerTableau::from_generators(&[x.clone(), z], 2),
            Err(Error::InvalidGroup(_))
        ));
        let xx: PauliString = "XX".parse().unwrap();
        let negxx = xx.clone().negated();
        assert!(matches!(
            StabilizerTableau::from_generators(&[xx, negxx], 2),
            Err(Error::InvalidGroup(_))
        ));
    }

    #[test]
    fn apply_h_and_cz_cluster_step() {
        let mut t = StabilizerTableau::zero_state(2);
        t.apply(&CliffordGate::h(0)).unwrap();
        assert_eq!(t.expectation(&"XI".parse().unwrap()).unwrap(), 1);
        t.apply(&CliffordGate::h(1)).unwrap();
        t.apply(&CliffordGate::Cz { a: 0, b: 1 }).unwrap();
        assert_eq!(t.expectation(&"XZ".parse().unwrap()).unwrap(), 1);
        assert_eq!(t.expectation(&"ZX".parse().unwrap()).unwrap(), 1);
        t.validate().unwrap();
    }

    #[test]
    fn measurement_is_repeatable_and_collapsing() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let mut t = StabilizerTableau::zero_state(1);
        let z = zgen(1, 0);
        let rec = t.measure(&z, &mut rng, 0).unwrap();
        assert_eq!(rec.outcome, 1);
        assert!(rec.deterministic);

        let x: PauliString = "X".parse().unwrap();
        let first = t.measure(&x, &mut rng, 0).unwrap();
        assert!(!first.deterministic);
        let second = t.measure(&x, &mut rng, 0).unwrap();
        assert!(second.deterministic);
        assert_eq!(first.outcome, second.outcome);
        t.validate().unwrap();
    }

    #[test]
    fn random_measurement_mean_is_binomial() {
        // Sample mean of ⟨X⟩ on |0⟩ over 10⁴ shots is 0 within 3σ = 0.03.
        let shots = 10_000;
        let mut acc = 0i64;
        for shot in 0..shots {
            let mut rng = ChaCha12Rng::seed_from_u64(42);
            rng.set_stream(shot);
            let mut t = StabilizerTableau::zero_state(1);
            let rec = t.measure(&"X".parse().unwrap(), &mut rng, shot).unwrap();
            acc += rec.outcome as i64;
        }
        let mean = acc as f64 / shots as f64;
        assert!(mean.abs() < 0.03, "mean {mean}");
    }

    #[test]
    fn measuring_deterministic_string_changes_nothing() {
        let xx: PauliString = "XX".parse().unwrap();
        let zz: PauliString = "ZZ".parse().unwrap();
        let mut t =
            StabilizerTableau::from_generators(&[xx.clone(), zz.clone()], 2).unwrap();
        let before = t.dump();
        let mut rng = ChaCha12Rng::seed_from_u64(1);
        t.measure(&xx, &mut rng, 0).unwrap();
        assert_eq!(t.dump(), before);
    }

    #[test]
    fn logical_measurement_consumes_a_pair() {
        let zz: PauliString = "ZZ".parse().unwrap();
        let mut t = StabilizerTableau::from_generators(&[zz], 2).unwrap();
        assert_eq!(t.num_logical(), 1);
        let z0: PauliString = "ZI".parse().unwrap();
        assert_eq!(t.expectation(&z0).unwrap(), 0);
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let rec = t.measure(&z0, &mut rng, 0).unwrap();
        assert!(!rec.deterministic);
        assert_eq!(t.num_logical(), 0);
        assert_eq!(t.expectation(&z0).unwrap(), rec.outcome);
        t.validate().unwrap();
    }

    #[test]
    fn degeneracy_doubles_when_a_generator_is_removed() {
        let gens: Vec<_> = (0..5).map(|q| zgen(5, q)).collect();
        let t = StabilizerTableau::from_generators(&gens, 5).unwrap();
        assert_eq!(t.num_logical(), 0);
        let t2 = StabilizerTableau::from_generators(&gens[..4], 5).unwrap();
        assert_eq!(t2.num_logical(), 1);
    }

    #[test]
    fn expectation_multiplicativity_over_group_members() {
        let xx: PauliString = "XXI".parse().unwrap();
        let zz: PauliString = "ZZI".parse().unwrap();
        let z2: PauliString = "IIZ".parse().unwrap();
        let t = StabilizerTableau::from_generators(&[xx.clone(), zz.clone(), z2.clone()], 3)
            .unwrap();
        let yy: PauliString = "YYI".parse().unwrap();
        let prod = yy.mul(&z2).unwrap();
        assert_eq!(
            t.expectation(&prod).unwrap(),
            t.expectation(&yy).unwrap() * t.expectation(&z2).unwrap()
        );
    }

    #[test]
    fn dump_round_trip() {
        let xx: PauliString = "XX".parse().unwrap();
        let t = StabilizerTableau::from_generators(&[xx], 2).unwrap();
        let text = t.dump();
        let back = StabilizerTableau::from_dump(&text).unwrap();
        assert_eq!(back.dump(), text);
    }

    #[test]
    fn random_circuits_match_dense_oracle() {
        // 1000 random (circuit, string) pairs on up to 8 qubits: tableau
        // expectation equals the dense oracle exactly.
        let mut rng = ChaCha12Rng::seed_from_u64(2024);
        for trial in 0..250 {
            let n = 2 + (trial % 7);
            let mut t = StabilizerTableau::zero_state(n);
            let mut d = DenseState::new(n).unwrap();
            for _ in 0..20 {
                let g = random_gate(n, &mut rng);
                t.apply(&g).unwrap();
                d.apply(&g).unwrap();
            }
            for _ in 0..4 {
                let p = random_hermitian_string(n, &mut rng);
                let te = t.expectation(&p).unwrap();
                let de = d.real_expectation(&p).unwrap();
                assert!(
                    (te as f64 - de).abs() < 1e-9,
                    "n={n}: tableau {te} vs dense {de} for {p}"
                );
            }
            t.validate().unwrap();
        }
    }

    pub(crate) fn random_gate<R: Rng>(n: usize, rng: &mut R) -> CliffordGate {
        match rng.gen_range(0..5) {
            0 => CliffordGate::h(rng.gen_range(0..n)),
            1 => CliffordGate::s(rng.gen_range(0..n)),
            2 => {
                let all = crate::pauli::SingleQubitClifford::enumerate();
                CliffordGate::SingleQ {
                    q: rng.gen_range(0..n),
                    c: all[rng.gen_range(0..all.len())],
                }
            }
            3 => {
                let a = rng.gen_range(0..n);
                let mut b = rng.gen_range(0..n);
                while b == a {
                    b = rng.gen_range(0..n);
                }
                CliffordGate::Cz { a, b }
            }
            _ => {
                let a = rng.gen_range(0..n);
                let mut b = rng.gen_range(0..n);
                while b == a {
                    b = rng.gen_range(0..n);
                }
                let letters = [Pauli::X, Pauli::Y, Pauli::Z];
                CliffordGate::move_unitary(
                    n,
                    rng.gen(),
                    (a, letters[rng.gen_range(0..3)]),
                    (b, letters[rng.gen_range(0..3)]),
                )
                .unwrap()
            }
        }
    }

    pub(crate) fn random_hermitian_string<R: Rng>(n: usize, rng: &mut R) -> PauliString {
        loop {
            let sites: Vec<(usize, Pauli)> = (0..n)
                .filter_map(|q| {
                    let letters = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];
                    let l = letters[rng.gen_range(0..4)];
                    (l != Pauli::I).then_some((q, l))
                })
                .collect();
            if sites.is_empty() {
                continue;
            }
            let p = PauliString::from_sites(n, &sites).unwrap();
            return if rng.gen() { p.negated() } else { p };
        }
    }
}
