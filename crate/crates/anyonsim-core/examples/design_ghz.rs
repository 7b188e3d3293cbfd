//! Scratch tool: searches the single-exchange choreography for rotation
//! choices that realize the entangling braid, then prints the tomography
//! pattern and the double-exchange check.

use anyonsim_core::graph::{CodeGraph, MoveKind, PairLabel};
use anyonsim_core::pauli::{Pauli, PauliString};
use anyonsim_core::tableau::StabilizerTableau;

fn valid_moves(g: &CodeGraph, defect: usize, to: usize) -> Vec<PauliString> {
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
        .filter(|q| {
            let mut g2 = g.clone();
            g2.move_d3v(defect, to, Some(q)).is_ok()
        })
        .collect()
}

fn logical_products(
    g: &CodeGraph,
    t: &StabilizerTableau,
) -> Vec<(String, i8)> {
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
                let name: String = [i, j, k]
                    .iter()
                    .map(|&x| [' ', 'X', 'Y', 'Z'][x])
                    .collect();
                out.push((name, t.expectation(&p).unwrap()));
            }
        }
    }
    out
}

fn main() {
    let mut base = CodeGraph::build_surface_code(5, 5).unwrap();
    base.create_d3v_pair(1, 5, PairLabel::A).unwrap();
    base.create_d3v_pair(9, 13, PairLabel::B).unwrap();
    let a2 = base.pair(PairLabel::A).unwrap().defect_ids.1;
    let b2 = base.pair(PairLabel::B).unwrap().defect_ids.1;
    let t0 = StabilizerTableau::from_generators(
        &CodeGraph::build_surface_code(5, 5).unwrap().state_generators(),
        25,
    )
    .unwrap();

    let plans: Vec<Vec<(usize, (usize, usize))>> = vec![
        vec![
            (a2, (1, 3)),
            (a2, (1, 4)),
            (b2, (2, 2)),
            (b2, (1, 3)),
            (b2, (0, 3)),
        ],
        vec![
            (a2, (1, 3)),
            (a2, (1, 4)),
            (b2, (2, 3)),
            (b2, (1, 3)),
            (b2, (0, 3)),
        ],
        vec![
            (a2, (1, 3)),
            (a2, (1, 4)),
            (b2, (2, 2)),
            (b2, (1, 2)),
            (b2, (0, 1)),
        ],
        vec![
            (a2, (1, 3)),
            (a2, (1, 4)),
            (b2, (2, 2)),
            (b2, (1, 2)),
            (b2, (0, 3)),
        ],
        vec![
            (a2, (1, 3)),
            (a2, (1, 4)),
            (b2, (2, 2)),
            (b2, (1, 1)),
            (b2, (0, 1)),
        ],
    ];
    for plan in &plans {
        println!(
            "--- plan: {:?}",
            plan.iter().map(|&(_, to)| to).collect::<Vec<_>>()
        );
        run_plan(&base, &t0, a2, plan);
    }
}

fn run_plan(
    base: &CodeGraph,
    t0: &StabilizerTableau,
    a2: usize,
    plan: &[(usize, (usize, usize))],
) {
    let mut stack = vec![(base.clone(), t0.clone(), 0usize, Vec::<PauliString>::new())];
    let mut found = 0;
    while let Some((g, t, step, qs)) = stack.pop() {
        if step == plan.len() {
            let viol: Vec<usize> = g
                .plaquettes()
                .iter()
                .filter(|p| t.expectation(&p.operator(25)).unwrap() < 0)
                .map(|p| p.id)
                .collect();
            if !viol.is_empty() {
                continue;
            }
            let products = logical_products(&g, &t);
            let get = |name: &str| {
                products
                    .iter()
                    .find(|(n, _)| n == name)
                    .map(|(_, e)| *e)
                    .unwrap()
            };
            let xy_triples = products
                .iter()
                .filter(|(n, e)| *e != 0 && n.chars().all(|c| c == 'X' || c == 'Y'))
                .count();
            let ghz = get("Z  ") == 0
                && get(" Z ") == 0
                && get("  Z") == 0
                && get("ZZ ") != 0
                && get("Z Z") != 0
                && get(" ZZ") != 0
                && xy_triples > 0;
            if ghz {
                found += 1;
                println!("=== GHZ solution {found} ===");
                for (i, q) in qs.iter().enumerate() {
                    println!("  step {i}: {q}");
                }
                for (name, e) in &products {
                    if *e != 0 {
                        println!("  <{name}> = {e:+}");
                    }
                }
                // Double exchange from here.
                let mut g2 = g.clone();
                let mut t2 = t.clone();
                for &(d, to) in &[(a2, (1usize, 3usize)), (a2, (1, 2))] {
                    let tov = g2.vertex(to.0, to.1);
                    let opts = valid_moves(&g2, d, tov);
                    // Prefer an option that flips all Z values.
                    let mut done = false;
                    for q in &opts {
                        let mut g3 = g2.clone();
                        let em = g3.move_d3v(d, tov, Some(q)).unwrap();
                        let mut t3 = t2.clone();
                        t3.apply(&em.gate).unwrap();
                        if to == (1, 2) {
                            let z1 = g3.pair(PairLabel::A).unwrap().z_loop.clone();
                            let z2 = g3.pair(PairLabel::B).unwrap().z_loop.clone();
                            let (z3, _) = g3.base_logical().unwrap().clone();
                            let vals = (
                                t3.expectation(&z1).unwrap(),
                                t3.expectation(&z2).unwrap(),
                                t3.expectation(&z3).unwrap(),
                            );
                            println!("  double-exchange candidate Q={q}: Z values {vals:?}");
                            if vals == (-1, -1, -1) {
                                g2 = g3;
                                t2 = t3;
                                done = true;
                                break;
                            }
                        } else {
                            g2 = g3;
                            t2 = t3;
                            done = true;
                            break;
                        }
                    }
                    if !done {
                        println!("  (no double-exchange completion)");
                        break;
                    }
                }
                if found >= 2 {
                    return;
                }
            }
            continue;
        }
        let (d, to) = plan[step];
        let tov = g.vertex(to.0, to.1);
        for q in valid_moves(&g, d, tov) {
            let mut g2 = g.clone();
            let em = g2.move_d3v(d, tov, Some(&q)).unwrap();
            if step < 2 && em.kind != MoveKind::Nearest {
                continue;
            }
            let mut t2 = t.clone();
            t2.apply(&em.gate).unwrap();
            let mut qs2 = qs.clone();
            qs2.push(q);
            stack.push((g2, t2, step + 1, qs2));
        }
    }
    println!("search done, {found} solutions");
}
