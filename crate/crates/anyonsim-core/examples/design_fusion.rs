//! Scratch tool: designs the fusion-protocol geometry by search and prints
//! the frozen step data for the shipped script.

use std::collections::{BTreeMap, HashMap, VecDeque};

use anyonsim_core::graph::{CodeGraph, PairLabel};
use anyonsim_core::pauli::{CliffordGate, Pauli, PauliString};
use anyonsim_core::tableau::StabilizerTableau;

fn values(g: &CodeGraph, t: &StabilizerTableau) -> BTreeMap<usize, i8> {
    g.plaquettes()
        .iter()
        .map(|p| (p.id, t.expectation(&p.operator(g.num_qubits())).unwrap()))
        .collect()
}

fn show(g: &CodeGraph, t: &StabilizerTableau, label: &str) {
    let vals = values(g, t);
    let viol: Vec<usize> = vals
        .iter()
        .filter(|(_, &v)| v < 0)
        .map(|(&id, _)| id)
        .collect();
    let defects: Vec<String> = g
        .defects()
        .iter()
        .map(|d| {
            let (r, c) = g.coords(d.vertex);
            format!("{}@({r},{c})", d.pair.as_str())
        })
        .collect();
    println!("{label}: violations {viol:?} defects {defects:?}");
}

/// Single-qubit Paulis flipping exactly two live faces, never acting on a
/// qubit that hosts a defect.
fn hops(g: &CodeGraph) -> Vec<(usize, Pauli, usize, usize)> {
    let n = g.num_qubits();
    let mut out = Vec::new();
    for v in 0..n {
        if g.defect_at(v).is_some() {
            continue;
        }
        for letter in [Pauli::X, Pauli::Y, Pauli::Z] {
            let p = PauliString::single(n, v, letter).unwrap();
            let flipped: Vec<usize> = g
                .plaquettes()
                .iter()
                .filter(|f| f.operator(n).anticommutes(&p).unwrap())
                .map(|f| f.id)
                .collect();
            if flipped.len() == 2 {
                out.push((v, letter, flipped[0], flipped[1]));
            }
        }
    }
    out
}

/// BFS a violation path from `start` to `goal` whose total string picks up
/// the prescribed anticommutation bits with the two reference loops.
fn find_winding_path(
    g: &CodeGraph,
    start: usize,
    goal: usize,
    refs: (&PauliString, &PauliString),
    want: (bool, bool),
) -> Option<Vec<(usize, Pauli)>> {
    let n = g.num_qubits();
    let edges = hops(g);
    let mut adj: HashMap<usize, Vec<(usize, Pauli, usize)>> = HashMap::new();
    for &(v, l, f1, f2) in &edges {
        adj.entry(f1).or_default().push((v, l, f2));
        adj.entry(f2).or_default().push((v, l, f1));
    }
    type State = (usize, (bool, bool));
    let mut seen: HashMap<State, (usize, Pauli, State)> = HashMap::new();
    let mut queue = VecDeque::new();
    let init: State = (start, (false, false));
    queue.push_back(init);
    while let Some((face, bits)) = queue.pop_front() {
        if face == goal && bits == want {
            let mut path = Vec::new();
            let mut cur = (face, bits);
            while cur != init {
                let &(v, l, prev) = seen.get(&cur).unwrap();
                path.push((v, l));
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for &(v, l, next) in adj.get(&face).into_iter().flatten() {
            let p = PauliString::single(n, v, l).unwrap();
            let nb = (
                bits.0 ^ p.anticommutes(refs.0).unwrap(),
                bits.1 ^ p.anticommutes(refs.1).unwrap(),
            );
            let state = (next, nb);
            if !seen.contains_key(&state) && state != init {
                seen.insert(state, (v, l, (face, bits)));
                queue.push_back(state);
            }
        }
    }
    None
}

fn fmt_path(g: &CodeGraph, path: &[(usize, Pauli)]) -> String {
    path.iter()
        .map(|&(v, l)| {
            let (r, c) = g.coords(v);
            format!("({r},{c}):{}", l.as_char())
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    let n = 25;
    let mut g = CodeGraph::build_surface_code(5, 5).unwrap();
    let mut t = StabilizerTableau::from_generators(&g.state_generators(), n).unwrap();
    show(&g, &t, "I  (ground)");

    // II: create the pair by cutting the edge between faces (1,1) and (2,1).
    g.create_d3v_pair(5, 9, PairLabel::A).unwrap();
    show(&g, &t, "II (pair created)");
    let (d_left, d_right) = g.pair(PairLabel::A).unwrap().defect_ids;
    println!(
        "defects: left D{d_left}@{:?} right D{d_right}@{:?}",
        g.coords(g.defect(d_left).unwrap().vertex),
        g.coords(g.defect(d_right).unwrap().vertex)
    );
    println!("zloop = {}", g.pair(PairLabel::A).unwrap().z_loop);
    println!("xloop = {}", g.pair(PairLabel::A).unwrap().x_loop);

    // III: separate the right defect to (2,3).
    let m3 = g.move_d3v(d_right, g.vertex(2, 3), None).unwrap();
    let q3 = match &m3.gate {
        CliffordGate::PauliRot { string, .. } => string.clone(),
        _ => unreachable!(),
    };
    println!("III move Q = {q3}");
    t.apply(&m3.gate).unwrap();
    show(&g, &t, "III");

    // IV: separate the left defect to (2,0).
    let m4 = g.move_d3v(d_left, g.vertex(2, 0), None).unwrap();
    let q4 = match &m4.gate {
        CliffordGate::PauliRot { string, .. } => string.clone(),
        _ => unreachable!(),
    };
    println!("IV move Q = {q4}");
    t.apply(&m4.gate).unwrap();
    show(&g, &t, "IV");
    g.validate().unwrap();
    let zloop = g.pair(PairLabel::A).unwrap().z_loop.clone();
    let reduced = g.reduce_string(&zloop);
    println!(
        "loop at IV: <zloop> = {} (reduced {} -> {})",
        t.expectation(&zloop).unwrap(),
        zloop,
        reduced
    );

    // V: fermion at the lower-left corner.
    for v in [g.vertex(4, 0), g.vertex(4, 1)] {
        t.apply(&CliffordGate::pauli(v, Pauli::Z)).unwrap();
    }
    show(&g, &t, "V  (fermion at corner)");

    // VI-VIII: wind the violation on face 13 around the right sigma (the
    // second defect) and back to face 12: anticommute with both the pair
    // loop and the first-defect loop.
    let xloop = g.pair(PairLabel::A).unwrap().x_loop.clone();
    let path = find_winding_path(&g, 13, 12, (&zloop, &xloop), (true, false))
        .expect("winding path exists");
    println!("winding path ({} hops): {}", path.len(), fmt_path(&g, &path));
    for &(v, l) in &path {
        t.apply(&CliffordGate::pauli(v, l)).unwrap();
    }
    show(&g, &t, "VIII (wound around right sigma)");
    let zloop_now = g.pair(PairLabel::A).unwrap().z_loop.clone();
    let reduced = g.reduce_string(&zloop_now);
    println!(
        "loop at VIII: <zloop> = {} <reduced> = {} (reduced form {})",
        t.expectation(&zloop_now).unwrap(),
        t.expectation(&reduced).unwrap(),
        reduced
    );

    // IX-X: bring the defects back together, undoing each outbound
    // deformation with the same rotation string.
    let m = g.move_d3v(d_left, g.vertex(2, 1), Some(&q4)).unwrap();
    t.apply(&m.gate).unwrap();
    show(&g, &t, "IX");
    let m = g.move_d3v(d_right, g.vertex(2, 2), Some(&q3)).unwrap();
    t.apply(&m.gate).unwrap();
    show(&g, &t, "X");

    // XI: annihilate.
    g.annihilate_pair(PairLabel::A).unwrap();
    show(&g, &t, "XI (annihilated)");
    g.validate().unwrap();
    let vals = values(&g, &t);
    println!("face 5 = {}, face 9 = {}", vals[&5], vals[&9]);
}
