//! GHZ via the braid-prefix single exchange: A out, B across, stop.

use anyonsim_core::graph::{CodeGraph, PairLabel};
use anyonsim_core::pauli::PauliString;
use anyonsim_core::tableau::StabilizerTableau;

const QS: [&str; 13] = [
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

fn logical_products(g: &CodeGraph, t: &StabilizerTableau) -> Vec<(String, i8)> {
    let z1 = g.pair(PairLabel::A).unwrap().z_loop.clone();
    let x1 = g.pair(PairLabel::A).unwrap().x_loop.clone();
    let z2 = g.pair(PairLabel::B).unwrap().z_loop.clone();
    let x2 = g.pair(PairLabel::B).unwrap().x_loop.clone();
    let (z3, x3) = g.base_logical().unwrap().clone();
    let basis = [[x1, z1], [x2, z2], [x3, z3]];
    let mut out = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            for k in 0..4usize {
                if i == 0 && j == 0 && k == 0 {
                    continue;
                }
                let mut p = PauliString::identity(25);
                for (qubit, &idx) in [i, j, k].iter().enumerate() {
                    match idx {
                        0 => {}
                        1 => p = p.mul(&basis[qubit][0]).unwrap(),
                        2 => {
                            let f = basis[qubit][0].mul(&basis[qubit][1]).unwrap();
                            let f = PauliString::from_masks(
                                25,
                                f.masks().0.to_vec(),
                                f.masks().1.to_vec(),
                                (f.phase_exponent() + 1) & 3,
                            );
                            p = p.mul(&f).unwrap();
                        }
                        _ => p = p.mul(&basis[qubit][1]).unwrap(),
                    }
                }
                let name: String = [i, j, k].iter().map(|&x| [' ', 'X', 'Y', 'Z'][x]).collect();
                out.push((name, t.expectation(&p).unwrap()));
            }
        }
    }
    out
}

fn main() {
    let mut g = CodeGraph::build_surface_code(5, 5).unwrap();
    let mut t = StabilizerTableau::from_generators(&g.state_generators(), 25).unwrap();
    g.create_d3v_pair(4, 8, PairLabel::A).unwrap();
    g.create_d3v_pair(13, 14, PairLabel::B).unwrap();
    let a2 = g.pair(PairLabel::A).unwrap().defect_ids.1;
    let b1 = g.pair(PairLabel::B).unwrap().defect_ids.0;
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
    ];
    for (i, &(d, to)) in plan.iter().enumerate() {
        let q: PauliString = QS[i].parse().unwrap();
        let em = g.move_d3v(d, g.vertex(to.0, to.1), Some(&q)).unwrap();
        t.apply(&em.gate).unwrap();
        if i == 5 || i == 8 {
            println!("== after step {i} (single/double exchange point):");
            for (name, e) in logical_products(&g, &t) {
                if e != 0 {
                    println!("  <{name}> = {e:+}");
                }
            }
        }
    }
}
