use crate::quandle::QuandleTable;

const UNSET: u16 = u16::MAX;

/// Greedy generating set: each new element is the first one outside the
/// subquandle generated so far.
pub fn generating_set(q: &QuandleTable) -> Vec<usize> {
    let mut gens = vec![0];
    let mut sub = q.subquandle_generated(&gens);
    while sub.len() < q.size() {
        let mut inside = vec![false; q.size()];
        sub.iter().for_each(|&x| inside[x] = true);
        let next = (0..q.size()).find(|&x| !inside[x]).unwrap();
        gens.push(next);
        sub = q.subquandle_generated(&gens);
    }
    gens
}

/// Per-element invariant preserved by isomorphisms: cycle type of L_x.
fn local_invariants(q: &QuandleTable) -> Vec<Vec<usize>> {
    (0..q.size()).map(|x| q.left_translation(x).cycle_type()).collect()
}

struct Partial {
    map: Vec<u16>,
    inv: Vec<u16>,
    members: Vec<usize>,
}

impl Partial {
    fn assign(&mut self, x: usize, y: usize) -> bool {
        match (self.map[x], self.inv[y]) {
            (UNSET, UNSET) => {
                self.map[x] = y as u16;
                self.inv[y] = x as u16;
                self.members.push(x);
                true
            }
            (m, _) => m as usize == y,
        }
    }

    /// Closes the domain under * and \, starting from member index `from`;
    /// false on a clash or a non-injective image.
    fn close(&mut self, a: &QuandleTable, b: &QuandleTable, from: usize) -> bool {
        // Pairs (i, j) with i, j < from are already closed.
        let mut i = from;
        while i < self.members.len() {
            let x = self.members[i];
            for j in 0..=i {
                let y = self.members[j];
                let (fx, fy) = (self.map[x] as usize, self.map[y] as usize);
                for (u, v) in [
                    (a.star(x, y), b.star(fx, fy)),
                    (a.star(y, x), b.star(fy, fx)),
                    (a.ldiv(x, y), b.ldiv(fx, fy)),
                    (a.ldiv(y, x), b.ldiv(fy, fx)),
                ] {
                    if !self.assign(u, v) {
                        return false;
                    }
                }
            }
            i += 1;
        }
        true
    }
}

/// An isomorphism a → b as an image array, if one exists.
///
/// Intended for connected quandles: b then has a transitive automorphism
/// group, so the first generator may be sent to 0 without loss.
pub fn are_isomorphic(a: &QuandleTable, b: &QuandleTable) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let inv_a = local_invariants(a);
    let inv_b = local_invariants(b);
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let gens = generating_set(a);
    let first_targets: Vec<usize> = if b.is_connected() && a.is_connected() {
        vec![(0..b.size()).find(|&y| inv_b[y] == inv_a[gens[0]])?]
    } else {
        (0..b.size()).filter(|&y| inv_b[y] == inv_a[gens[0]]).collect()
    };
    let n = a.size();
    for t in first_targets {
        let mut st = Partial { map: vec![UNSET; n], inv: vec![UNSET; n], members: Vec::new() };
        st.assign(gens[0], t);
        if st.close(a, b, 0) && search(a, b, &gens, 1, &inv_a, &inv_b, &mut st) {
            let phi: Vec<usize> = st.map.iter().map(|&v| v as usize).collect();
            debug_assert!(is_isomorphism(a, b, &phi));
            if is_isomorphism(a, b, &phi) {
                return Some(phi);
            }
        }
    }
    None
}

fn search(
    a: &QuandleTable,
    b: &QuandleTable,
    gens: &[usize],
    level: usize,
    inv_a: &[Vec<usize>],
    inv_b: &[Vec<usize>],
    st: &mut Partial,
) -> bool {
    if level == gens.len() {
        return st.members.len() == a.size();
    }
    let g = gens[level];
    if st.map[g] != UNSET {
        return search(a, b, gens, level + 1, inv_a, inv_b, st);
    }
    for y in 0..b.size() {
        if st.inv[y] != UNSET || inv_b[y] != inv_a[g] {
            continue;
        }
        let saved = (st.map.clone(), st.inv.clone(), st.members.len());
        let from = st.members.len();
        if st.assign(g, y) && st.close(a, b, from) && search(a, b, gens, level + 1, inv_a, inv_b, st) {
            return true;
        }
        st.map = saved.0;
        st.inv = saved.1;
        st.members.truncate(saved.2);
    }
    false
}

/// φ is a bijection with φ(x*y) = φ(x)*φ(y) for all pairs.
pub fn is_isomorphism(a: &QuandleTable, b: &QuandleTable, phi: &[usize]) -> bool {
    let n = a.size();
    if b.size() != n || phi.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in phi {
        if y >= n || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    (0..n).all(|x| (0..n).all(|y| phi[a.star(x, y)] == b.star(phi[x], phi[y])))
}
