//! Scratch tool: designs the double-braid geometry and prints the move
//! unitaries that get frozen into the shipped scripts.

use std::collections::BTreeMap;

use anyonsim_core::graph::{CodeGraph, MoveKind, PairLabel};
use anyonsim_core::pauli::CliffordGate;
use anyonsim_core::tableau::StabilizerTableau;

struct Sim {
    g: CodeGraph,
    t: StabilizerTableau,
    moves: Vec<(String, MoveKind, String)>,
}

impl Sim {
    fn new() -> Self {
        let g = CodeGraph::build_surface_code(5, 5).unwrap();
        let t = StabilizerTableau::from_generators(&g.state_generators(), 25).unwrap();
        Sim {
            g,
            t,
            moves: Vec::new(),
        }
    }

    fn mv(&mut self, defect: usize, to: (usize, usize)) -> Result<(), anyonsim_core::Error> {
        let from = self.g.coords(self.g.defect(defect).unwrap().vertex);
        let target = self.g.vertex(to.0, to.1);
        let m = self.g.move_d3v(defect, target, None)?;
        self.t.apply(&m.gate).unwrap();
        let q = match &m.gate {
            CliffordGate::PauliRot { string, .. } => string.to_string(),
            _ => unreachable!(),
        };
        println!(
            "  move D{defect} {from:?} -> {to:?}: {:?} Q={q}",
            m.kind
        );
        self.moves.push((format!("{from:?}->{to:?}"), m.kind, q));
        Ok(())
    }

    fn show(&self, label: &str) {
        let vals: BTreeMap<usize, i8> = self
            .g
            .plaquettes()
            .iter()
            .map(|p| (p.id, self.t.expectation(&p.operator(25)).unwrap()))
            .collect();
        let viol: Vec<usize> = vals
            .iter()
            .filter(|(_, &v)| v < 0)
            .map(|(&id, _)| id)
            .collect();
        let defects: Vec<String> = self
            .g
            .defects()
            .iter()
            .filter(|d| d.pair != PairLabel::Corner)
            .map(|d| {
                let (r, c) = self.g.coords(d.vertex);
                format!("{}@({r},{c})", d.pair.as_str())
            })
            .collect();
        println!("{label}: violations {viol:?} defects {defects:?}");
        self.g.validate().unwrap();
    }
}

fn main() {
    let mut s = Sim::new();
    s.show("I");

    s.g.create_d3v_pair(4, 8, PairLabel::A).unwrap();
    s.g.create_d3v_pair(13, 14, PairLabel::B).unwrap();
    s.show("II (pairs created)");
    let (a1, a2) = s.g.pair(PairLabel::A).unwrap().defect_ids;
    let (b1, b2) = s.g.pair(PairLabel::B).unwrap().defect_ids;
    println!(
        "A: D{a1}@{:?} D{a2}@{:?}; B: D{b1}@{:?} D{b2}@{:?}",
        s.g.coords(s.g.defect(a1).unwrap().vertex),
        s.g.coords(s.g.defect(a2).unwrap().vertex),
        s.g.coords(s.g.defect(b1).unwrap().vertex),
        s.g.coords(s.g.defect(b2).unwrap().vertex)
    );

    // III: separate pair A to the right edge.
    s.mv(a2, (2, 2)).unwrap();
    s.mv(a2, (2, 3)).unwrap();
    s.mv(a2, (2, 4)).unwrap();
    s.show("III");

    // IV: bring B's top defect up across A's cut, sidestepping diagonally
    // through the cut region and continuing up column 3.
    s.mv(b1, (2, 3)).unwrap();
    s.mv(b1, (1, 3)).unwrap();
    s.mv(b1, (0, 3)).unwrap();
    s.show("IV");

    // V-VIII: bring A's defect back across B's stretched cut.
    s.mv(a2, (2, 3)).unwrap();
    s.mv(a2, (2, 2)).unwrap();
    s.mv(a2, (2, 1)).unwrap();
    s.show("VIII");

    // IX-XI: bring B's defect back down around the repaired region.
    s.mv(b1, (1, 3)).unwrap();
    s.mv(b1, (2, 3)).unwrap();
    s.mv(b1, (3, 3)).unwrap();
    s.mv(b1, (3, 2)).unwrap();
    s.show("XI");

    // XII: annihilate both pairs.
    s.g.annihilate_pair(PairLabel::A).unwrap();
    s.g.annihilate_pair(PairLabel::B).unwrap();
    s.show("XII (annihilated)");

    let mut nearest = 0;
    let mut diag = 0;
    let mut threeq = 0;
    for (_, kind, _) in &s.moves {
        match kind {
            MoveKind::Nearest => nearest += 1,
            MoveKind::Diagonal => diag += 1,
            MoveKind::ThreeQubit => threeq += 1,
        }
    }
    println!("moves: {nearest} nearest, {diag} diagonal, {threeq} three-qubit");
    println!("CZ count: {}", nearest + 10 * diag + 15 * threeq);
}
