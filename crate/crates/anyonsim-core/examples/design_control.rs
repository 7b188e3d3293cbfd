//! Scratch tool: verifies the distinguishable-braid control. Pair B carries
//! an attached plaquette violation; its moves use the opposite rotation sign
//! plus a searched single-qubit transport string.

use std::collections::BTreeSet;

use anyonsim_core::graph::{CodeGraph, PairLabel};
use anyonsim_core::pauli::{CliffordGate, Pauli, PauliString};
use anyonsim_core::tableau::StabilizerTableau;

const BRAID_QS: [&str; 13] = [
    "+IIIIIIIIIIIYZIIIIIIIIIIII",
    "+IIIIIIIIIIIIXZIIIIIIIIIII",
    "+IIIIIIIIIIIIIXXIIIIIIIIII",
    "+IIIIIIIIIIIIZXIIIYIIIIIII",
    "+IIIIIIIIZIIIXXIIIIIIIIIII",
    "+IIIXIIIIXIIIIIIIIIIIIIIII",
    "+IIIIIIIIIIIIIXXIIIIIIIIII",
    "+IIIIIIIIIIIIXZIIIIIIIIIII",
    "+IIIIIIIIIIIYZIIIIIIIIIIII",
    "+IIIXIIIIYIIIIIIIIIIIIIIII",
    "+IIIIIIIXXIIIIIIIIIIIIIIII",
    "+IIIIIIIYIIIIZIIIIIIIIIIII",
    "+IIIIIIIIIIIIXIIIIYIIIIIII",
];

fn violations(g: &CodeGraph, t: &StabilizerTableau) -> Vec<usize> {
    g.plaquettes()
        .iter()
        .filter(|p| t.expectation(&p.operator(25)).unwrap() < 0)
        .map(|p| p.id)
        .collect()
}

fn main() {
    let mut g = CodeGraph::build_surface_code(5, 5).unwrap();
    let mut t = StabilizerTableau::from_generators(&g.state_generators(), 25).unwrap();
    g.create_d3v_pair(4, 8, PairLabel::A).unwrap();
    g.create_d3v_pair(13, 14, PairLabel::B).unwrap();
    let a2 = g.pair(PairLabel::A).unwrap().defect_ids.1;
    let b1 = g.pair(PairLabel::B).unwrap().defect_ids.0;

    // Attach a violation to each defect of pair B.
    for (v, l) in [(g.vertex(3, 2), Pauli::X), (g.vertex(4, 2), Pauli::Z)] {
        t.apply(&CliffordGate::pauli(v, l)).unwrap();
    }
    println!("after attach: {:?}", violations(&g, &t));

    let plan: Vec<(usize, (usize, usize))> = vec![
        (a2, (2, 2)),
        (a2, (2, 3)),
        (a2, (2, 4)),
        (b1, (2, 3)),
        (b1, (1, 3)),
        (b1, (0, 3)),
        (a2, (2, 3)),
        (a2, (2, 2)),
        (a2, (2, 1)),
        (b1, (1, 3)),
        (b1, (1, 2)),
        (b1, (2, 2)),
        (b1, (3, 2)),
    ];

    for (i, &(d, to)) in plan.iter().enumerate() {
        let q: PauliString = BRAID_QS[i].parse().unwrap();
        let is_b = d == b1;
        let em = g.move_d3v(d, g.vertex(to.0, to.1), Some(&q)).unwrap();
        if !is_b {
            t.apply(&em.gate).unwrap();
            println!(
                "step {i}: A move to {to:?}, violations {:?}",
                violations(&g, &t)
            );
            continue;
        }
        // Control: opposite rotation sign for pair B moves.
        let flipped = match &em.gate {
            CliffordGate::PauliRot { string, .. } => CliffordGate::PauliRot {
                plus: false,
                string: string.clone(),
            },
            _ => unreachable!(),
        };
        t.apply(&flipped).unwrap();
        // Desired pattern: one violation on a face at each B defect, nothing
        // else. Search transport strings of weight <= 2 near the move.
        let b_faces: Vec<BTreeSet<usize>> = g
            .defects()
            .iter()
            .filter(|df| df.pair == PairLabel::B)
            .map(|df| g.faces_at(df.vertex).into_iter().collect::<BTreeSet<_>>())
            .collect();
        let near: Vec<usize> = (0..25)
            .filter(|&v| {
                q.support()
                    .iter()
                    .any(|&s| {
                        let (sr, sc) = g.coords(s);
                        let (vr, vc) = g.coords(v);
                        sr.abs_diff(vr) <= 1 && sc.abs_diff(vc) <= 1
                    })
            })
            .collect();
        let letters = [Pauli::X, Pauli::Y, Pauli::Z];
        let mut candidates: Vec<Vec<(usize, Pauli)>> = vec![vec![]];
        for &v in &near {
            for l in letters {
                candidates.push(vec![(v, l)]);
            }
        }
        for (ai, &va) in near.iter().enumerate() {
            for &vb in &near[ai + 1..] {
                for la in letters {
                    for lb in letters {
                        candidates.push(vec![(va, la), (vb, lb)]);
                    }
                }
            }
        }
        let mut found = None;
        for cand in &candidates {
            let mut t2 = t.clone();
            for &(v, l) in cand {
                t2.apply(&CliffordGate::pauli(v, l)).unwrap();
            }
            let viol: BTreeSet<usize> = violations(&g, &t2).into_iter().collect();
            if viol.len() == 2 {
                let mut iter = viol.iter();
                let (f1, f2) = (*iter.next().unwrap(), *iter.next().unwrap());
                let ok = (b_faces[0].contains(&f1) && b_faces[1].contains(&f2))
                    || (b_faces[0].contains(&f2) && b_faces[1].contains(&f1));
                if ok {
                    found = Some((cand.clone(), t2));
                    break;
                }
            }
        }
        let (cand, t2) = found.expect("transport string exists");
        t = t2;
        let fmt: Vec<String> = cand
            .iter()
            .map(|&(v, l)| {
                let (r, c) = g.coords(v);
                format!("({r},{c}):{}", l.as_char())
            })
            .collect();
        println!(
            "step {i}: B move to {to:?} [sign flipped], transport [{}], violations {:?}",
            fmt.join(" "),
            violations(&g, &t)
        );
    }

    // Detach and annihilate.
    for (v, l) in [(g.vertex(3, 2), Pauli::X), (g.vertex(4, 2), Pauli::Z)] {
        t.apply(&CliffordGate::pauli(v, l)).unwrap();
    }
    println!("after detach: {:?}", violations(&g, &t));
    g.annihilate_pair(PairLabel::A).unwrap();
    g.annihilate_pair(PairLabel::B).unwrap();
    println!("XII control violations: {:?}", violations(&g, &t));
}
