//! Exact algebra of n-qubit Pauli strings: multiplication with phase
//! tracking, commutation testing, and conjugation by Clifford gates.
//!
//! A string is stored in the normal form `i^k · (∏ X_q^{x_q}) · (∏ Z_q^{z_q})`
//! with the X part applied left of the Z part and `k` an exponent mod 4.
//! All phase arithmetic derives from this form, so multiplication is a pure
//! bit and phase computation:
//!
//! `(i^j X^a Z^b)(i^k X^c Z^d) = i^{j+k+2|b∧c|} X^{a⊕c} Z^{b⊕d}`
//!
//! A string is Hermitian iff `k + |x∧z|` is even; the sign printed in text
//! form is the phase left over once each `X_q Z_q` pair is folded into a Y.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }

    pub const fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    /// True iff the two letters anticommute (both non-identity and distinct).
    pub fn anticommutes(self, other: Pauli) -> bool {
        self != Pauli::I && other != Pauli::I && self != other
    }
}

/// Phase-tracked n-qubit Pauli operator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    /// Exponent k of the global phase i^k, 0..=3.
    phase: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        let w = words_for(n);
        PauliString {
            n,
            x: vec![0; w],
            z: vec![0; w],
            phase: 0,
        }
    }

    /// Builds `∏ letters` (sign +1) from sparse site assignments.
    pub fn from_sites(n: usize, sites: &[(usize, Pauli)]) -> Result<Self> {
        let mut p = PauliString::identity(n);
        for &(q, letter) in sites {
            if q >= n {
                return Err(Error::QubitRange { index: q, n });
            }
            if p.site(q) != Pauli::I {
                return Err(Error::Dimension(format!("duplicate site {q}")));
            }
            p.set_site(q, letter);
        }
        Ok(p)
    }

    pub fn single(n: usize, q: usize, letter: Pauli) -> Result<Self> {
        Self::from_sites(n, &[(q, letter)])
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn phase_exponent(&self) -> u8 {
        self.phase
    }

    fn bit(mask: &[u64], q: usize) -> bool {
        mask[q / WORD_BITS] >> (q % WORD_BITS) & 1 == 1
    }

    fn set_bit(mask: &mut [u64], q: usize, v: bool) {
        let w = q / WORD_BITS;
        let b = q % WORD_BITS;
        if v {
            mask[w] |= 1 << b;
        } else {
            mask[w] &= !(1 << b);
        }
    }

    pub fn site(&self, q: usize) -> Pauli {
        Pauli::from_bits(Self::bit(&self.x, q), Self::bit(&self.z, q))
    }

    /// Overwrites the letter at site `q`, keeping the letters-form sign.
    pub fn set_site(&mut self, q: usize, letter: Pauli) {
        let old = self.site(q);
        let (ox, oz) = old.bits();
        if ox && oz {
            self.phase = (self.phase + 3) & 3;
        }
        let (x, z) = letter.bits();
        Self::set_bit(&mut self.x, q, x);
        Self::set_bit(&mut self.z, q, z);
        if x && z {
            self.phase = (self.phase + 1) & 3;
        }
    }

    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn is_identity_letters(&self) -> bool {
        self.x.iter().all(|&w| w == 0) && self.z.iter().all(|&w| w == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.site(q) != Pauli::I).collect()
    }

    pub fn sites(&self) -> Vec<(usize, Pauli)> {
        (0..self.n)
            .filter_map(|q| {
                let p = self.site(q);
                (p != Pauli::I).then_some((q, p))
            })
            .collect()
    }

    fn y_count(&self) -> u32 {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// Hermitian iff the phase exponent matches the Y count parity.
    pub fn is_hermitian(&self) -> bool {
        (self.phase as u32 + self.y_count()) % 2 == 0
    }

    /// Sign of the letters form: the operator equals `i^m · ∏ letters` with
    /// `m = phase − y_count mod 4`. Returns `m`.
    pub fn letters_phase(&self) -> u8 {
        ((self.phase as i32 - self.y_count() as i32).rem_euclid(4)) as u8
    }

    /// For Hermitian strings, +1 or −1; None otherwise.
    pub fn sign(&self) -> Option<i8> {
        match self.letters_phase() {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Drops any leftover factor of i, returning the Hermitian operator with
    /// the same letters and positive sign. Observables derived from
    /// intermediate products are canonicalized through this.
    pub fn canonicalized_hermitian(mut self) -> Self {
        self.phase = (self.y_count() % 4) as u8;
        self
    }

    /// Flips the overall sign.
    pub fn negated(mut self) -> Self {
        self.phase = (self.phase + 2) & 3;
        self
    }

    fn check_same_n(&self, other: &PauliString) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension(format!(
                "operand sizes differ: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        self.check_same_n(other)?;
        let mut x = self.x.clone();
        let mut z = self.z.clone();
        let mut cross = 0u32;
        for i in 0..x.len() {
            cross += (self.z[i] & other.x[i]).count_ones();
            x[i] ^= other.x[i];
            z[i] ^= other.z[i];
        }
        let phase = (self.phase as u32 + other.phase as u32 + 2 * cross) & 3;
        Ok(PauliString {
            n: self.n,
            x,
            z,
            phase: phase as u8,
        })
    }

    /// True iff the symplectic inner product `|a_x∧b_z| + |a_z∧b_x|` is even.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        self.check_same_n(other)?;
        let mut acc = 0u32;
        for i in 0..self.x.len() {
            acc += (self.x[i] & other.z[i]).count_ones();
            acc += (self.z[i] & other.x[i]).count_ones();
        }
        Ok(acc % 2 == 0)
    }

    pub fn anticommutes(&self, other: &PauliString) -> Result<bool> {
        Ok(!self.commutes(other)?)
    }

    /// True iff the x/z masks coincide (phase ignored).
    pub fn same_letters(&self, other: &PauliString) -> bool {
        self.n == other.n && self.x == other.x && self.z == other.z
    }

    /// Conjugation `g · self · g†` with exact phase.
    pub fn conjugated(&self, gate: &CliffordGate) -> Result<PauliString> {
        gate.check_targets(self.n)?;
        let mut out = self.clone();
        match gate {
            CliffordGate::SingleQ { q, c } => {
                let site = SitePauli {
                    x: Self::bit(&out.x, *q),
                    z: Self::bit(&out.z, *q),
                    k: 0,
                };
                let img = c.conjugate_site(site);
                Self::set_bit(&mut out.x, *q, img.x);
                Self::set_bit(&mut out.z, *q, img.z);
                out.phase = (out.phase + img.k) & 3;
            }
            CliffordGate::Cz { a, b } => {
                let xa = Self::bit(&out.x, *a);
                let xb = Self::bit(&out.x, *b);
                if xa && xb {
                    out.phase = (out.phase + 2) & 3;
                }
                if xa {
                    let zb = Self::bit(&out.z, *b);
                    Self::set_bit(&mut out.z, *b, !zb);
                }
                if xb {
                    let za = Self::bit(&out.z, *a);
                    Self::set_bit(&mut out.z, *a, !za);
                }
            }
            CliffordGate::Swap { a, b } => {
                let (xa, za) = (Self::bit(&out.x, *a), Self::bit(&out.z, *a));
                let (xb, zb) = (Self::bit(&out.x, *b), Self::bit(&out.z, *b));
                Self::set_bit(&mut out.x, *a, xb);
                Self::set_bit(&mut out.z, *a, zb);
                Self::set_bit(&mut out.x, *b, xa);
                Self::set_bit(&mut out.z, *b, za);
            }
            CliffordGate::PauliRot { plus, string } => {
                if self.anticommutes(string)? {
                    out = string.mul(self)?;
                    out.phase = (out.phase + if *plus { 1 } else { 3 }) & 3;
                }
            }
        }
        Ok(out)
    }

    pub fn conjugated_by_all(&self, gates: &[CliffordGate]) -> Result<PauliString> {
        let mut p = self.clone();
        for g in gates {
            p = p.conjugated(g)?;
        }
        Ok(p)
    }

    /// Raw symplectic row (x bits then z bits) for GF(2) linear algebra.
    pub fn masks(&self) -> (&[u64], &[u64]) {
        (&self.x, &self.z)
    }

    pub fn from_masks(n: usize, x: Vec<u64>, z: Vec<u64>, phase: u8) -> Self {
        debug_assert_eq!(x.len(), words_for(n));
        debug_assert_eq!(z.len(), words_for(n));
        PauliString { n, x, z, phase }
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = match self.letters_phase() {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{token}")?;
        for q in 0..self.n {
            write!(f, "{}", self.site(q).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (m, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1u8, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3u8, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0u8, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2u8, r)
        } else {
            (0u8, s)
        };
        if rest.is_empty() {
            return Err(Error::Parse("empty Pauli string".into()));
        }
        let mut p = PauliString::identity(rest.chars().count());
        for (q, c) in rest.chars().enumerate() {
            let letter = Pauli::from_char(c)
                .ok_or_else(|| Error::Parse(format!("invalid Pauli character '{c}'")))?;
            p.set_site(q, letter);
        }
        p.phase = (p.phase + m) & 3;
        Ok(p)
    }
}

/// A signed single-qubit Pauli in normal form: `i^k X^x Z^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SitePauli {
    pub x: bool,
    pub z: bool,
    pub k: u8,
}

impl SitePauli {
    pub const IDENTITY: SitePauli = SitePauli {
        x: false,
        z: false,
        k: 0,
    };

    pub fn hermitian(letter: Pauli, negative: bool) -> Self {
        let (x, z) = letter.bits();
        let mut k = if x && z { 1 } else { 0 };
        if negative {
            k = (k + 2) & 3;
        }
        SitePauli { x, z, k }
    }

    pub fn letter(self) -> Pauli {
        Pauli::from_bits(self.x, self.z)
    }

    pub fn is_negative(self) -> bool {
        let y = u8::from(self.x && self.z);
        (self.k + 4 - y) & 3 == 2
    }

    fn mul(self, o: SitePauli) -> SitePauli {
        let cross = u8::from(self.z && o.x);
        SitePauli {
            x: self.x ^ o.x,
            z: self.z ^ o.z,
            k: (self.k + o.k + 2 * cross) & 3,
        }
    }

    fn anticommutes(self, o: SitePauli) -> bool {
        (u8::from(self.x && o.z) + u8::from(self.z && o.x)) % 2 == 1
    }
}

/// One of the 24 single-qubit Cliffords, stored as the signed permutation it
/// induces on {X, Z} (the Y image follows from the product).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SingleQubitClifford {
    img_x: SitePauli,
    img_z: SitePauli,
}

impl SingleQubitClifford {
    pub const IDENTITY: SingleQubitClifford = SingleQubitClifford {
        img_x: SitePauli {
            x: true,
            z: false,
            k: 0,
        },
        img_z: SitePauli {
            x: false,
            z: true,
            k: 0,
        },
    };

    pub fn new(img_x: SitePauli, img_z: SitePauli) -> Result<Self> {
        let valid = img_x.letter() != Pauli::I
            && img_z.letter() != Pauli::I
            && img_x.letter() != img_z.letter()
            && img_x.k % 2 == u8::from(img_x.letter() == Pauli::Y) % 2
            && img_z.k % 2 == u8::from(img_z.letter() == Pauli::Y) % 2;
        if !valid {
            return Err(Error::Parse(format!(
                "invalid single-qubit Clifford images: X->{img_x:?}, Z->{img_z:?}"
            )));
        }
        Ok(SingleQubitClifford { img_x, img_z })
    }

    pub fn from_images(
        x_to: Pauli,
        x_neg: bool,
        z_to: Pauli,
        z_neg: bool,
    ) -> Result<Self> {
        Self::new(
            SitePauli::hermitian(x_to, x_neg),
            SitePauli::hermitian(z_to, z_neg),
        )
    }

    pub fn image_of_x(&self) -> SitePauli {
        self.img_x
    }

    pub fn image_of_z(&self) -> SitePauli {
        self.img_z
    }

    /// Image of an arbitrary signed site operator under conjugation.
    pub fn conjugate_site(&self, p: SitePauli) -> SitePauli {
        let mut out = SitePauli {
            x: false,
            z: false,
            k: p.k,
        };
        if p.x {
            out = out.mul(self.img_x);
        }
        if p.z {
            out = out.mul(self.img_z);
        }
        out
    }

    /// Group composition: `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &SingleQubitClifford) -> SingleQubitClifford {
        SingleQubitClifford {
            img_x: self.conjugate_site(other.img_x),
            img_z: self.conjugate_site(other.img_z),
        }
    }

    pub fn inverse(&self) -> SingleQubitClifford {
        // Find preimages: the letter mapping is a permutation of {X, Y, Z}.
        let mut inv_x = SitePauli::IDENTITY;
        let mut inv_z = SitePauli::IDENTITY;
        for letter in [Pauli::X, Pauli::Y, Pauli::Z] {
            let img = self.conjugate_site(SitePauli::hermitian(letter, false));
            if img.letter() == Pauli::X {
                inv_x = SitePauli::hermitian(letter, img.is_negative());
            }
            if img.letter() == Pauli::Z {
                inv_z = SitePauli::hermitian(letter, img.is_negative());
            }
        }
        SingleQubitClifford {
            img_x: inv_x,
            img_z: inv_z,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn h() -> Self {
        Self::from_images(Pauli::Z, false, Pauli::X, false).unwrap()
    }

    pub fn s() -> Self {
        Self::from_images(Pauli::Y, false, Pauli::Z, false).unwrap()
    }

    pub fn s_dagger() -> Self {
        Self::from_images(Pauli::Y, true, Pauli::Z, false).unwrap()
    }

    pub fn x() -> Self {
        Self::from_images(Pauli::X, false, Pauli::Z, true).unwrap()
    }

    pub fn y() -> Self {
        Self::from_images(Pauli::X, true, Pauli::Z, true).unwrap()
    }

    pub fn z() -> Self {
        Self::from_images(Pauli::X, true, Pauli::Z, false).unwrap()
    }

    /// √X: Z → −Y, Y → Z.
    pub fn sqrt_x() -> Self {
        Self::from_images(Pauli::X, false, Pauli::Y, true).unwrap()
    }

    pub fn sqrt_x_dagger() -> Self {
        Self::from_images(Pauli::X, false, Pauli::Y, false).unwrap()
    }

    pub fn pauli(letter: Pauli) -> Self {
        match letter {
            Pauli::I => Self::IDENTITY,
            Pauli::X => Self::x(),
            Pauli::Y => Self::y(),
            Pauli::Z => Self::z(),
        }
    }

    /// All 24 elements, in a deterministic order.
    pub fn enumerate() -> Vec<SingleQubitClifford> {
        let letters = [Pauli::X, Pauli::Y, Pauli::Z];
        let mut out = Vec::with_capacity(24);
        for &lx in &letters {
            for &lz in &letters {
                if lx == lz {
                    continue;
                }
                for sx in [false, true] {
                    for sz in [false, true] {
                        out.push(Self::from_images(lx, sx, lz, sz).unwrap());
                    }
                }
            }
        }
        out
    }

    /// Shortest word over {H, S} realizing this element (empty for identity).
    /// Used for export naming and for building exact dense matrices.
    pub fn hs_word(&self) -> String {
        // BFS over the group from the identity.
        let mut frontier = vec![(Self::IDENTITY, String::new())];
        let mut seen = vec![Self::IDENTITY];
        if self.is_identity() {
            return String::new();
        }
        loop {
            let mut next = Vec::new();
            for (c, word) in &frontier {
                for (gen, ch) in [(Self::h(), 'H'), (Self::s(), 'S')] {
                    let composed = gen.compose(c);
                    if composed == *self {
                        let mut w = word.clone();
                        w.insert(0, ch);
                        return w;
                    }
                    if !seen.contains(&composed) {
                        seen.push(composed);
                        let mut w = word.clone();
                        w.insert(0, ch);
                        next.push((composed, w));
                    }
                }
            }
            assert!(!next.is_empty(), "H and S generate all 24 elements");
            frontier = next;
        }
    }

    /// Canonical export name: a familiar alias when one exists, otherwise the
    /// shortest {H, S} word.
    pub fn name(&self) -> String {
        for (c, name) in Self::named() {
            if c == *self {
                return name.to_string();
            }
        }
        self.hs_word()
    }

    pub fn from_name(name: &str) -> Result<Self> {
        for (c, n) in Self::named() {
            if n == name {
                return Ok(c);
            }
        }
        let mut out = Self::IDENTITY;
        for ch in name.chars().rev() {
            let gen = match ch {
                'H' => Self::h(),
                'S' => Self::s(),
                _ => {
                    return Err(Error::Parse(format!(
                        "unknown single-qubit Clifford name '{name}'"
                    )))
                }
            };
            out = gen.compose(&out);
        }
        Ok(out)
    }

    fn named() -> [(SingleQubitClifford, &'static str); 9] {
        [
            (Self::IDENTITY, "I"),
            (Self::x(), "X"),
            (Self::y(), "Y"),
            (Self::z(), "Z"),
            (Self::h(), "H"),
            (Self::s(), "S"),
            (Self::s_dagger(), "SD"),
            (Self::sqrt_x(), "SX"),
            (Self::sqrt_x_dagger(), "SXD"),
        ]
    }
}

/// Elementary Clifford gate acting on a register of qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliffordGate {
    SingleQ { q: usize, c: SingleQubitClifford },
    Cz { a: usize, b: usize },
    Swap { a: usize, b: usize },
    /// `exp(±iπ/4 · string)` for a Hermitian Pauli string; the two-qubit case
    /// is the defect move unitary, larger supports arise from deformed-region
    /// moves.
    PauliRot { plus: bool, string: PauliString },
}

impl CliffordGate {
    pub fn h(q: usize) -> Self {
        CliffordGate::SingleQ {
            q,
            c: SingleQubitClifford::h(),
        }
    }

    pub fn s(q: usize) -> Self {
        CliffordGate::SingleQ {
            q,
            c: SingleQubitClifford::s(),
        }
    }

    pub fn s_dagger(q: usize) -> Self {
        CliffordGate::SingleQ {
            q,
            c: SingleQubitClifford::s_dagger(),
        }
    }

    pub fn pauli(q: usize, letter: Pauli) -> Self {
        CliffordGate::SingleQ {
            q,
            c: SingleQubitClifford::pauli(letter),
        }
    }

    pub fn sqrt_x(q: usize) -> Self {
        CliffordGate::SingleQ {
            q,
            c: SingleQubitClifford::sqrt_x(),
        }
    }

    pub fn sqrt_x_dagger(q: usize) -> Self {
        CliffordGate::SingleQ {
            q,
            c: SingleQubitClifford::sqrt_x_dagger(),
        }
    }

    /// `exp(±iπ/4 τ_u τ_v)` on distinct qubits `u` and `v`.
    pub fn move_unitary(
        n: usize,
        plus: bool,
        u: (usize, Pauli),
        v: (usize, Pauli),
    ) -> Result<Self> {
        if u.0 == v.0 {
            return Err(Error::Dimension(
                "move unitary requires two distinct qubits".into(),
            ));
        }
        if u.1 == Pauli::I || v.1 == Pauli::I {
            return Err(Error::Dimension(
                "move unitary requires non-identity Pauli labels".into(),
            ));
        }
        let string = PauliString::from_sites(n, &[u, v])?;
        Ok(CliffordGate::PauliRot { plus, string })
    }

    pub fn pauli_rot(plus: bool, string: PauliString) -> Result<Self> {
        if !string.is_hermitian() {
            return Err(Error::NotHermitian(string.to_string()));
        }
        if string.is_identity_letters() {
            return Err(Error::Dimension("rotation about identity".into()));
        }
        Ok(CliffordGate::PauliRot { plus, string })
    }

    pub fn targets(&self) -> Vec<usize> {
        match self {
            CliffordGate::SingleQ { q, .. } => vec![*q],
            CliffordGate::Cz { a, b } | CliffordGate::Swap { a, b } => vec![*a, *b],
            CliffordGate::PauliRot { string, .. } => string.support(),
        }
    }

    pub fn inverse(&self) -> CliffordGate {
        match self {
            CliffordGate::SingleQ { q, c } => CliffordGate::SingleQ {
                q: *q,
                c: c.inverse(),
            },
            CliffordGate::Cz { .. } | CliffordGate::Swap { .. } => self.clone(),
            CliffordGate::PauliRot { plus, string } => CliffordGate::PauliRot {
                plus: !plus,
                string: string.clone(),
            },
        }
    }

    pub fn check_targets(&self, n: usize) -> Result<()> {
        match self {
            CliffordGate::Cz { a, b } | CliffordGate::Swap { a, b } if a == b => {
                return Err(Error::Dimension(
                    "two-qubit gate requires distinct targets".into(),
                ));
            }
            CliffordGate::PauliRot { string, .. } => {
                if string.num_qubits() != n {
                    return Err(Error::Dimension(format!(
                        "rotation string on {} qubits applied to {n}-qubit register",
                        string.num_qubits()
                    )));
                }
            }
            _ => {}
        }
        for t in self.targets() {
            if t >= n {
                return Err(Error::QubitRange { index: t, n });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_identity_leaves_operand() {
        for s in ["+XYZI", "-IZZX", "+iXIII", "-iYYYY"] {
            let p: PauliString = s.parse().unwrap();
            let id = PauliString::identity(4);
            assert_eq!(id.mul(&p).unwrap(), p);
            assert_eq!(p.mul(&id).unwrap(), p);
        }
    }

    #[test]
    fn single_qubit_products() {
        let x: PauliString = "X".parse().unwrap();
        let y: PauliString = "Y".parse().unwrap();
        let z: PauliString = "Z".parse().unwrap();
        // X·Y = iZ
        assert_eq!(x.mul(&y).unwrap().to_string(), "+iZ");
        // Y·X = −iZ
        assert_eq!(y.mul(&x).unwrap().to_string(), "-iZ");
        // Z·X = iY
        assert_eq!(z.mul(&x).unwrap().to_string(), "+iY");
        // X·Z = −iY
        assert_eq!(x.mul(&z).unwrap().to_string(), "-iY");
        // self-products of Hermitian strings are +identity
        for p in [&x, &y, &z] {
            let sq = p.mul(p).unwrap();
            assert!(sq.is_identity_letters());
            assert_eq!(sq.phase_exponent(), 0);
        }
    }

    #[test]
    fn two_qubit_product_zx_times_xz() {
        let a: PauliString = "ZX".parse().unwrap();
        let b: PauliString = "XZ".parse().unwrap();
        // (Z⊗X)(X⊗Z) = (ZX)⊗(XZ) = (iY)⊗(−iY) = Y⊗Y
        assert_eq!(a.mul(&b).unwrap().to_string(), "+YY");
    }

    #[test]
    fn commutation_basics() {
        let x0: PauliString = "XI".parse().unwrap();
        let z0: PauliString = "ZI".parse().unwrap();
        let z1: PauliString = "IZ".parse().unwrap();
        let xx: PauliString = "XX".parse().unwrap();
        let zz: PauliString = "ZZ".parse().unwrap();
        assert!(!x0.commutes(&z0).unwrap());
        assert!(x0.commutes(&z1).unwrap());
        assert!(xx.commutes(&zz).unwrap());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let a: PauliString = "XX".parse().unwrap();
        let b: PauliString = "X".parse().unwrap();
        assert!(a.mul(&b).is_err());
        assert!(a.commutes(&b).is_err());
    }

    #[test]
    fn text_round_trip() {
        for s in ["+IXZYI", "-IXZYI", "+iXZ", "-iZ", "+I"] {
            let p: PauliString = s.parse().unwrap();
            assert_eq!(p.to_string(), *s);
        }
        // leading token optional on parse
        let p: PauliString = "XYZ".parse().unwrap();
        assert_eq!(p.to_string(), "+XYZ");
    }

    #[test]
    fn hermiticity_and_canonicalization() {
        let y: PauliString = "Y".parse().unwrap();
        assert!(y.is_hermitian());
        let xz = PauliString::single(1, 0, Pauli::X)
            .unwrap()
            .mul(&PauliString::single(1, 0, Pauli::Z).unwrap())
            .unwrap();
        assert!(!xz.is_hermitian());
        let fixed = xz.canonicalized_hermitian();
        assert!(fixed.is_hermitian());
        assert_eq!(fixed.to_string(), "+Y");
    }

    #[test]
    fn hadamard_exchanges_x_and_z() {
        let x: PauliString = "X".parse().unwrap();
        let h = CliffordGate::h(0);
        assert_eq!(x.conjugated(&h).unwrap().to_string(), "+Z");
        let y: PauliString = "Y".parse().unwrap();
        assert_eq!(y.conjugated(&h).unwrap().to_string(), "-Y");
    }

    #[test]
    fn cz_standard_rule() {
        let x0: PauliString = "XI".parse().unwrap();
        let cz = CliffordGate::Cz { a: 0, b: 1 };
        assert_eq!(x0.conjugated(&cz).unwrap().to_string(), "+XZ");
        let xx: PauliString = "XX".parse().unwrap();
        assert_eq!(xx.conjugated(&cz).unwrap().to_string(), "+YY");
        let xy: PauliString = "XY".parse().unwrap();
        assert_eq!(xy.conjugated(&cz).unwrap().to_string(), "-YX");
    }

    #[test]
    fn move_unitary_conjugation() {
        // conjugate(Z₀⊗I₁, U₊(X₀X₁)) = Y₀⊗X₁
        let z0: PauliString = "ZI".parse().unwrap();
        let u = CliffordGate::move_unitary(2, true, (0, Pauli::X), (1, Pauli::X)).unwrap();
        assert_eq!(z0.conjugated(&u).unwrap().to_string(), "+YX");
        // commuting strings are untouched
        let xx: PauliString = "XX".parse().unwrap();
        assert_eq!(xx.conjugated(&u).unwrap(), xx);
    }

    #[test]
    fn single_qubit_clifford_group() {
        let all = SingleQubitClifford::enumerate();
        assert_eq!(all.len(), 24);
        for c in &all {
            let inv = c.inverse();
            assert!(c.compose(&inv).is_identity());
            assert!(inv.compose(c).is_identity());
            // name round-trip
            let name = c.name();
            assert_eq!(SingleQubitClifford::from_name(&name).unwrap(), *c);
        }
    }

    #[test]
    fn named_gates_act_correctly() {
        let s = SingleQubitClifford::s();
        let x = SitePauli::hermitian(Pauli::X, false);
        assert_eq!(s.conjugate_site(x).letter(), Pauli::Y);
        assert!(!s.conjugate_site(x).is_negative());
        let sx = SingleQubitClifford::sqrt_x();
        let z = SitePauli::hermitian(Pauli::Z, false);
        assert_eq!(sx.conjugate_site(z).letter(), Pauli::Y);
        assert!(sx.conjugate_site(z).is_negative());
    }
}
