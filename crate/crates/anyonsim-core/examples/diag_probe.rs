//! Scratch search: find a double-braid choreography with exactly 11 nearest,
//! 1 diagonal and 1 three-qubit move that annihilates cleanly into two
//! fermions.

use anyonsim_core::graph::{CodeGraph, MoveKind, PairLabel};
use anyonsim_core::pauli::{Pauli, PauliString};
use anyonsim_core::tableau::StabilizerTableau;

fn valid_moves(g: &CodeGraph, defect: usize, to: usize) -> Vec<(PauliString, MoveKind)> {
    let letters = [Pauli::X, Pauli::Y, Pauli::Z];
    let a = g.defect(defect).unwrap().vertex;
    let mut cands = Vec::new();
    for lt in letters {
        for la in letters {
            if let Ok(q) = PauliString::from_sites(25, &[(to, lt), (a, la)]) {
                cands.push(q);
            }
        }
    }
    let mids: Vec<usize> = (0..25)
        .filter(|&m| m != a && m != to && (g.grid_adjacent(m, a) || g.grid_adjacent(m, to)))
        .collect();
    for m in mids {
        for lt in letters {
            for lm in letters {
                for la in letters {
                    if let Ok(q) = PauliString::from_sites(25, &[(to, lt), (m, lm), (a, la)]) {
                        cands.push(q);
                    }
                }
            }
        }
    }
    cands
        .into_iter()
        .filter_map(|q| {
            let mut g2 = g.clone();
            g2.move_d3v(defect, to, Some(&q)).ok().map(|em| (q, em.kind))
        })
        .collect()
}

#[derive(Clone)]
struct Node {
    g: CodeGraph,
    t: StabilizerTableau,
    step: usize,
    counts: (usize, usize, usize),
    qs: Vec<PauliString>,
}

fn main() {
    let mut base = CodeGraph::build_surface_code(5, 5).unwrap();
    base.create_d3v_pair(4, 8, PairLabel::A).unwrap();
    base.create_d3v_pair(13, 14, PairLabel::B).unwrap();
    let a2 = base.pair(PairLabel::A).unwrap().defect_ids.1;
    let b1 = base.pair(PairLabel::B).unwrap().defect_ids.0;

    // Candidate plans: A out, B up with a diagonal, A back, B back.
    let returns: Vec<Vec<(usize, usize)>> = vec![
        vec![(1, 3), (2, 3), (3, 3), (3, 2)],
        vec![(1, 3), (1, 2), (2, 2), (3, 2)],
        vec![(1, 3), (2, 3), (2, 2), (3, 2)],
        vec![(1, 2), (2, 2), (3, 2)],
        vec![(1, 3), (2, 2), (3, 2)], // includes a diagonal hop back
    ];
    for (ri, ret) in returns.iter().enumerate() {
        let mut plan: Vec<(usize, (usize, usize))> = vec![
            (a2, (2, 2)),
            (a2, (2, 3)),
            (a2, (2, 4)),
            (b1, (2, 3)), // diagonal crossing
            (b1, (1, 3)),
            (b1, (0, 3)),
            (a2, (2, 3)),
            (a2, (2, 2)),
            (a2, (2, 1)),
        ];
        for &to in ret {
            plan.push((b1, to));
        }
        let fresh = CodeGraph::build_surface_code(5, 5).unwrap();
        let t0 = StabilizerTableau::from_generators(&fresh.state_generators(), 25).unwrap();
        let mut stack = vec![Node {
            g: base.clone(),
            t: t0,
            step: 0,
            counts: (0, 0, 0),
            qs: Vec::new(),
        }];
        let mut outcomes = std::collections::BTreeMap::new();
        while let Some(node) = stack.pop() {
            if node.step == plan.len() {
                if node.counts != (11, 1, 1) {
                    continue;
                }
                let mut g = node.g.clone();
                if g.annihilate_pair(PairLabel::A).is_err()
                    || g.annihilate_pair(PairLabel::B).is_err()
                {
                    continue;
                }
                let viol: Vec<usize> = g
                    .plaquettes()
                    .iter()
                    .filter(|p| node.t.expectation(&p.operator(25)).unwrap() < 0)
                    .map(|p| p.id)
                    .collect();
                outcomes
                    .entry(viol)
                    .or_insert_with(|| node.qs.clone());
                continue;
            }
            let (d, to) = plan[node.step];
            let tov = node.g.vertex(to.0, to.1);
            for (q, kind) in valid_moves(&node.g, d, tov) {
                let mut counts = node.counts;
                match kind {
                    MoveKind::Nearest => counts.0 += 1,
                    MoveKind::Diagonal => counts.1 += 1,
                    MoveKind::ThreeQubit => counts.2 += 1,
                }
                if counts.0 > 11 || counts.1 > 1 || counts.2 > 1 {
                    continue;
                }
                let mut g2 = node.g.clone();
                let em = g2.move_d3v(d, tov, Some(&q)).unwrap();
                let mut t2 = node.t.clone();
                t2.apply(&em.gate).unwrap();
                let mut qs = node.qs.clone();
                qs.push(q);
                stack.push(Node {
                    g: g2,
                    t: t2,
                    step: node.step + 1,
                    counts,
                    qs,
                });
            }
        }
        println!("return path {ri}: {:?}", ret);
        for (viol, qs) in &outcomes {
            println!("  violations {viol:?}");
            if viol == &vec![4, 8, 13, 14] {
                println!("  *** PAPER MATCH");
                for (i, q) in qs.iter().enumerate() {
                    println!("      step {i}: {q}");
                }
            }
        }
    }
}
