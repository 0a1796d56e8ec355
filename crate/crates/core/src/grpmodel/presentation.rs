use rayon::prelude::*;

use super::{cayley_words, Elem, FiniteGroup, GroupError, GroupMap};

/// Largest group searched by [`realize_presentation`].
pub const REALIZE_CAP: usize = 1000;

/// Group word as (symbol, exponent) syllables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    /// Parses words such as `a^2 b a^-1 (c a)^3` over single-letter symbols;
    /// `alphabet` fixes the symbol order.
    pub fn parse(alphabet: &str, text: &str) -> Result<Word, GroupError> {
        let letters: Vec<char> = alphabet.chars().collect();
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_seq(&letters, &chars, &mut pos)?;
        if pos != chars.len() {
            return Err(GroupError::Parse(format!("unexpected '{}' in {text}", chars[pos])));
        }
        Ok(w)
    }

    pub fn max_symbol(&self) -> Option<usize> {
        self.0.iter().map(|&(s, _)| s).max()
    }

    pub fn eval(&self, g: &FiniteGroup, assignment: &[Elem]) -> Elem {
        self.0.iter().fold(0, |acc, &(s, e)| g.mul(acc, g.pow(assignment[s], e)))
    }

    fn concat(mut self, other: Word) -> Word {
        self.0.extend(other.0);
        self
    }

    fn power(self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self };
        let mut out = Word(Vec::new());
        for _ in 0..e.unsigned_abs() {
            out = out.concat(base.clone());
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(s, e)| (s, -e)).collect())
    }
}

fn parse_seq(letters: &[char], chars: &[char], pos: &mut usize) -> Result<Word, GroupError> {
    let mut out = Word(Vec::new());
    while *pos < chars.len() && chars[*pos] != ')' {
        let atom = if chars[*pos] == '(' {
            *pos += 1;
            let inner = parse_seq(letters, chars, pos)?;
            if chars.get(*pos) != Some(&')') {
                return Err(GroupError::Parse("unbalanced parenthesis".into()));
            }
            *pos += 1;
            inner
        } else {
            let c = chars[*pos];
            let s = letters
                .iter()
                .position(|&l| l == c)
                .ok_or_else(|| GroupError::Parse(format!("unknown symbol '{c}'")))?;
            *pos += 1;
            Word(vec![(s, 1)])
        };
        let e = parse_exponent(chars, pos)?;
        out = out.concat(atom.power(e));
    }
    Ok(out)
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Result<i64, GroupError> {
    if chars.get(*pos) != Some(&'^') {
        return Ok(1);
    }
    *pos += 1;
    let start = *pos;
    if chars.get(*pos) == Some(&'-') {
        *pos += 1;
    }
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let s: String = chars[start..*pos].iter().collect();
    s.parse().map_err(|_| GroupError::Parse(format!("bad exponent '{s}'")))
}

/// Parses a comma-separated relator list.
pub fn parse_relators(alphabet: &str, text: &str) -> Result<Vec<Word>, GroupError> {
    text.split(',').map(|r| Word::parse(alphabet, r)).collect()
}

/// First tuple (lexicographic in element indices) that satisfies every
/// relator and generates `g`; `None` when no such tuple exists.
///
/// Relators are checked as soon as their symbols are all assigned.
pub fn realize_presentation(
    g: &FiniteGroup,
    symbols: usize,
    relators: &[Word],
) -> Result<Option<Vec<Elem>>, GroupError> {
    if g.order() > REALIZE_CAP {
        return Err(GroupError::TooLarge(format!("presentation search in a group of order {}", g.order())));
    }
    if symbols == 0 {
        return Ok((g.order() == 1).then(Vec::new));
    }
    let mut by_level: Vec<Vec<&Word>> = vec![Vec::new(); symbols];
    for r in relators {
        match r.max_symbol() {
            Some(s) if s < symbols => by_level[s].push(r),
            Some(s) => return Err(GroupError::Parse(format!("relator uses symbol {s}"))),
            None => {}
        }
    }
    let found = (0..g.order() as Elem).into_par_iter().find_map_first(|first| {
        let mut assign = vec![first];
        search(g, symbols, &by_level, &mut assign).then_some(assign)
    });
    Ok(found)
}

/// Up to `limit` generating tuples satisfying every relator, in
/// lexicographic order of element indices.
pub fn realizations(
    g: &FiniteGroup,
    symbols: usize,
    relators: &[Word],
    limit: usize,
) -> Result<Vec<Vec<Elem>>, GroupError> {
    if g.order() > REALIZE_CAP {
        return Err(GroupError::TooLarge(format!("presentation search in a group of order {}", g.order())));
    }
    let mut by_level: Vec<Vec<&Word>> = vec![Vec::new(); symbols];
    for r in relators {
        match r.max_symbol() {
            Some(s) if s < symbols => by_level[s].push(r),
            Some(s) => return Err(GroupError::Parse(format!("relator uses symbol {s}"))),
            None => {}
        }
    }
    let mut out = Vec::new();
    let mut assign = Vec::new();
    collect(g, symbols, &by_level, &mut assign, &mut out, limit);
    Ok(out)
}

fn collect(
    g: &FiniteGroup,
    symbols: usize,
    by_level: &[Vec<&Word>],
    assign: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if let Some(level) = assign.len().checked_sub(1) {
        if !by_level[level].iter().all(|r| r.eval(g, assign) == 0) {
            return;
        }
    }
    if assign.len() == symbols {
        if g.closure(assign).order() == g.order() {
            out.push(assign.clone());
        }
        return;
    }
    for x in 0..g.order() as Elem {
        assign.push(x);
        collect(g, symbols, by_level, assign, out, limit);
        assign.pop();
    }
}

fn search(g: &FiniteGroup, symbols: usize, by_level: &[Vec<&Word>], assign: &mut Vec<Elem>) -> bool {
    let level = assign.len() - 1;
    if !by_level[level].iter().all(|r| r.eval(g, assign) == 0) {
        return false;
    }
    if assign.len() == symbols {
        return g.closure(assign).order() == g.order();
    }
    for x in 0..g.order() as Elem {
        assign.push(x);
        if search(g, symbols, by_level, assign) {
            return true;
        }
        assign.pop();
    }
    false
}

/// Largest order handled by [`small_group_iso`].
pub const SMALL_GROUP_CAP: usize = 64;

/// An isomorphism g → h, found by backtracking over generator images with
/// matching element orders and an incremental Cayley-graph consistency check.
pub fn small_group_iso(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<GroupMap>, GroupError> {
    if g.order() > SMALL_GROUP_CAP || h.order() > SMALL_GROUP_CAP {
        return Err(GroupError::TooLarge(format!("isomorphism test for orders {} and {}", g.order(), h.order())));
    }
    Ok(find_isomorphism(g, h))
}

/// Isomorphism search without the size cap; exhaustive, so only suitable
/// for groups with short generating sets.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupMap> {
    if g.order() != h.order() || g.order_statistics() != h.order_statistics() {
        return None;
    }
    let gens = g.generators().to_vec();
    let h_orders: Vec<usize> = (0..h.order() as Elem).map(|x| h.element_order(x)).collect();
    let mut images = Vec::new();
    if !iso_search(g, h, &gens, &h_orders, &mut images) {
        return None;
    }
    let words = cayley_words(g, &gens).ok()?;
    let mut out = vec![0; g.order()];
    for &x in words.order.iter().skip(1) {
        let p = words.parent[x as usize];
        out[x as usize] = h.mul(out[p as usize], images[words.gen[x as usize] as usize]);
    }
    let map = GroupMap::from_images(out);
    debug_assert!(map.is_bijective() && map.is_homomorphism(g, h));
    Some(map)
}

fn iso_search(g: &FiniteGroup, h: &FiniteGroup, gens: &[Elem], h_orders: &[usize], images: &mut Vec<Elem>) -> bool {
    let i = images.len();
    if i == gens.len() {
        return true;
    }
    let want = g.element_order(gens[i]);
    for y in 0..h.order() as Elem {
        if h_orders[y as usize] != want {
            continue;
        }
        images.push(y);
        if consistent_prefix(g, h, &gens[..=i], images) && iso_search(g, h, gens, h_orders, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Whether the generator images extend to an injective homomorphism on
/// the subgroup they generate.
fn consistent_prefix(g: &FiniteGroup, h: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> bool {
    let n = g.order();
    let mut map = vec![Elem::MAX; n];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0 as Elem];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, *s);
            let fy = h.mul(map[x as usize], t);
            match map[y as usize] {
                Elem::MAX => {
                    if used[fy as usize] {
                        return false;
                    }
                    used[fy as usize] = true;
                    map[y as usize] = fy;
                    queue.push(y);
                }
                prev if prev != fy => return false,
                _ => {}
            }
        }
    }
    true
}
