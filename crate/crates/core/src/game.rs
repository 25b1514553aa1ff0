//! Arena of canonical short partizan games.
//!
//! Every node stored in an [`Arena`] is in canonical form: its option lists
//! contain no dominated and no reversible options, and identical option lists
//! are interned to the same [`GameId`]. Two ids from one arena are therefore
//! equal exactly when the games they denote are equivalent.
//!
//! The arena owns every memo table (sums, negatives, comparisons, outcomes,
//! atomic weights), so all operations take `&mut self` and one arena must not
//! be shared between threads. Parallel work uses one arena per worker and
//! exchanges values through [`Arena::format_value`] / [`Arena::parse_value`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Handle to a canonical game inside one [`Arena`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameId(u32);

impl GameId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Normal- or misère-play outcome class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    L,
    R,
    N,
    P,
}

impl Outcome {
    pub fn from_wins(left_moving_first: bool, right_moving_first: bool) -> Self {
        match (left_moving_first, right_moving_first) {
            (true, true) => Outcome::N,
            (true, false) => Outcome::L,
            (false, true) => Outcome::R,
            (false, false) => Outcome::P,
        }
    }

    /// Left wins when she makes the first move.
    pub fn left_wins_moving_first(self) -> bool {
        matches!(self, Outcome::L | Outcome::N)
    }

    /// Right wins when he makes the first move.
    pub fn right_wins_moving_first(self) -> bool {
        matches!(self, Outcome::R | Outcome::N)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::L => "L",
            Outcome::R => "R",
            Outcome::N => "N",
            Outcome::P => "P",
        }
    }

    fn rank(self) -> u8 {
        match self {
            Outcome::R => 0,
            Outcome::N | Outcome::P => 1,
            Outcome::L => 2,
        }
    }
}

impl PartialOrd for Outcome {
    /// `L > P > R` and `L > N > R`; `N` and `P` are incomparable.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        match self.rank().cmp(&other.rank()) {
            Ordering::Equal => None,
            ord => Some(ord),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of comparing two games in the partial order of game values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Greater,
    Less,
    Equivalent,
    Fuzzy,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Comparison::Greater => "Greater",
            Comparison::Less => "Less",
            Comparison::Equivalent => "Equivalent",
            Comparison::Fuzzy => "Fuzzy",
        };
        f.write_str(s)
    }
}

struct Node {
    left: Box<[GameId]>,
    right: Box<[GameId]>,
    birthday: u32,
    nim: Option<u32>,
    text: Box<str>,
}

/// Canonical Left and Right option lists, the hash-consing key.
type OptionSets = (Box<[GameId]>, Box<[GameId]>);

pub struct Arena {
    nodes: Vec<Node>,
    index: HashMap<OptionSets, GameId>,
    negatives: HashMap<GameId, GameId>,
    sums: HashMap<(GameId, GameId), GameId>,
    le_cache: HashMap<(GameId, GameId), bool>,
    wins: Vec<Option<(bool, bool)>>,
    all_small: Vec<Option<bool>>,
    nimbers: Vec<GameId>,
    aliases: HashMap<GameId, String>,
    alias_depth: u32,
    pub(crate) atomic_weights: HashMap<GameId, GameId>,
    pub(crate) far_star_wins: HashMap<(GameId, u32), (bool, bool)>,
    zero: GameId,
    star: GameId,
    up: GameId,
    up_star: GameId,
}

impl Default for Arena {
    fn default() -> Self {
        Self::new()
    }
}

impl Arena {
    pub fn new() -> Self {
        let mut arena = Arena {
            nodes: Vec::new(),
            index: HashMap::new(),
            negatives: HashMap::new(),
            sums: HashMap::new(),
            le_cache: HashMap::new(),
            wins: Vec::new(),
            all_small: Vec::new(),
            nimbers: Vec::new(),
            aliases: HashMap::new(),
            alias_depth: 0,
            atomic_weights: HashMap::new(),
            far_star_wins: HashMap::new(),
            zero: GameId(0),
            star: GameId(0),
            up: GameId(0),
            up_star: GameId(0),
        };
        arena.zero = arena.intern(Vec::new(), Vec::new());
        arena.nimbers.push(arena.zero);
        arena.star = arena.nimber(1);
        arena.up = arena.intern(vec![arena.zero], vec![arena.star]);
        arena.up_star = arena.construct([arena.zero, arena.star], [arena.zero]);
        arena
    }

    /// Number of distinct canonical games interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn zero(&self) -> GameId {
        self.zero
    }

    pub fn star(&self) -> GameId {
        self.star
    }

    pub fn up(&self) -> GameId {
        self.up
    }

    pub fn up_star(&self) -> GameId {
        self.up_star
    }

    pub fn down(&mut self) -> GameId {
        self.negate(self.up)
    }

    pub fn down_star(&mut self) -> GameId {
        self.negate(self.up_star)
    }

    pub fn left_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.index()].left
    }

    pub fn right_options(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.index()].right
    }

    /// Formal depth of the canonical game tree.
    pub fn birthday(&self, g: GameId) -> u32 {
        self.nodes[g.index()].birthday
    }

    /// `Some(n)` when `g` is the nim-heap `*n`.
    pub fn as_nimber(&self, g: GameId) -> Option<u32> {
        self.nodes[g.index()].nim
    }

    fn option_order(&self, a: GameId, b: GameId) -> Ordering {
        let (na, nb) = (&self.nodes[a.index()], &self.nodes[b.index()]);
        na.birthday
            .cmp(&nb.birthday)
            .then_with(|| na.text.cmp(&nb.text))
    }

    /// Stores an already-canonical option pair, returning the existing id if present.
    fn intern(&mut self, mut left: Vec<GameId>, mut right: Vec<GameId>) -> GameId {
        left.sort_by(|&a, &b| self.option_order(a, b));
        right.sort_by(|&a, &b| self.option_order(a, b));
        let key = (left.into_boxed_slice(), right.into_boxed_slice());
        if let Some(&id) = self.index.get(&key) {
            return id;
        }

        let (left, right) = key;
        let birthday = left
            .iter()
            .chain(right.iter())
            .map(|&o| self.birthday(o) + 1)
            .max()
            .unwrap_or(0);
        let nim = if left == right
            && left
                .iter()
                .enumerate()
                .all(|(i, &o)| self.as_nimber(o) == Some(i as u32))
        {
            Some(left.len() as u32)
        } else {
            None
        };
        let text = match nim {
            Some(0) => "0".to_string(),
            Some(1) => "*".to_string(),
            Some(n) => format!("*{n}"),
            None => {
                let mut s = String::from("{");
                self.write_list(&mut s, &left);
                s.push('|');
                self.write_list(&mut s, &right);
                s.push('}');
                s
            }
        };

        let id = GameId(self.nodes.len() as u32);
        self.index.insert((left.clone(), right.clone()), id);
        self.nodes.push(Node {
            left,
            right,
            birthday,
            nim,
            text: text.into_boxed_str(),
        });
        self.wins.push(None);
        self.all_small.push(None);
        id
    }

    fn write_list(&self, out: &mut String, list: &[GameId]) {
        for (i, &o) in list.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&self.nodes[o.index()].text);
        }
    }

    /// Canonical form of `{left | right}`.
    ///
    /// Dominated options are dropped and reversible options bypassed until
    /// neither rule applies; the result is then interned.
    pub fn construct(
        &mut self,
        left: impl IntoIterator<Item = GameId>,
        right: impl IntoIterator<Item = GameId>,
    ) -> GameId {
        let mut left: Vec<GameId> = left.into_iter().collect();
        let mut right: Vec<GameId> = right.into_iter().collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();

        loop {
            self.remove_dominated(&mut left, true);
            self.remove_dominated(&mut right, false);
            if self.bypass_reversible_left(&mut left, &right) {
                continue;
            }
            if self.bypass_reversible_right(&left, &mut right) {
                continue;
            }
            break;
        }
        self.intern(left, right)
    }

    /// Left keeps maximal options, Right keeps minimal ones.
    fn remove_dominated(&mut self, options: &mut Vec<GameId>, left: bool) {
        let mut i = 0;
        while i < options.len() {
            let a = options[i];
            let dominated = options
                .iter()
                .enumerate()
                .any(|(j, &b)| j != i && if left { self.le(a, b) } else { self.le(b, a) });
            if dominated {
                options.remove(i);
            } else {
                i += 1;
            }
        }
    }

    fn bypass_reversible_left(&mut self, left: &mut Vec<GameId>, right: &[GameId]) -> bool {
        for i in 0..left.len() {
            let gl = left[i];
            for k in 0..self.nodes[gl.index()].right.len() {
                let glr = self.nodes[gl.index()].right[k];
                if self.le_against(glr, left, right) {
                    left.remove(i);
                    for &x in self.nodes[glr.index()].left.iter() {
                        if !left.contains(&x) {
                            left.push(x);
                        }
                    }
                    return true;
                }
            }
        }
        false
    }

    fn bypass_reversible_right(&mut self, left: &[GameId], right: &mut Vec<GameId>) -> bool {
        for i in 0..right.len() {
            let gr = right[i];
            for k in 0..self.nodes[gr.index()].left.len() {
                let grl = self.nodes[gr.index()].left[k];
                if self.ge_against(grl, left, right) {
                    right.remove(i);
                    for &x in self.nodes[grl.index()].right.iter() {
                        if !right.contains(&x) {
                            right.push(x);
                        }
                    }
                    return true;
                }
            }
        }
        false
    }

    /// `x <= {left | right}` for a game given by option lists.
    fn le_against(&mut self, x: GameId, left: &[GameId], right: &[GameId]) -> bool {
        if right.iter().any(|&r| self.le(r, x)) {
            return false;
        }
        for k in 0..self.nodes[x.index()].left.len() {
            let xl = self.nodes[x.index()].left[k];
            if self.ge_against(xl, left, right) {
                return false;
            }
        }
        true
    }

    /// `y >= {left | right}` for a game given by option lists.
    fn ge_against(&mut self, y: GameId, left: &[GameId], right: &[GameId]) -> bool {
        if left.iter().any(|&l| self.le(y, l)) {
            return false;
        }
        for k in 0..self.nodes[y.index()].right.len() {
            let yr = self.nodes[y.index()].right[k];
            if self.le_against(yr, left, right) {
                return false;
            }
        }
        true
    }

    /// `g <= h`.
    pub fn le(&mut self, g: GameId, h: GameId) -> bool {
        if g == h {
            return true;
        }
        if let Some(&b) = self.le_cache.get(&(g, h)) {
            return b;
        }
        let mut result = true;
        for k in 0..self.nodes[g.index()].left.len() {
            let gl = self.nodes[g.index()].left[k];
            if self.le(h, gl) {
                result = false;
                break;
            }
        }
        if result {
            for k in 0..self.nodes[h.index()].right.len() {
                let hr = self.nodes[h.index()].right[k];
                if self.le(hr, g) {
                    result = false;
                    break;
                }
            }
        }
        self.le_cache.insert((g, h), result);
        result
    }

    pub fn compare(&mut self, g: GameId, h: GameId) -> Comparison {
        match (self.le(h, g), self.le(g, h)) {
            (true, true) => Comparison::Equivalent,
            (true, false) => Comparison::Greater,
            (false, true) => Comparison::Less,
            (false, false) => Comparison::Fuzzy,
        }
    }

    pub fn negate(&mut self, g: GameId) -> GameId {
        if let Some(&n) = self.negatives.get(&g) {
            return n;
        }
        let node = &self.nodes[g.index()];
        if node.nim.is_some() {
            return g;
        }
        let (left, right) = (node.left.clone(), node.right.clone());
        let new_left: Vec<GameId> = right.iter().map(|&r| self.negate(r)).collect();
        let new_right: Vec<GameId> = left.iter().map(|&l| self.negate(l)).collect();
        // the negative of a canonical game is canonical
        let n = self.intern(new_left, new_right);
        self.negatives.insert(g, n);
        self.negatives.insert(n, g);
        n
    }

    /// Canonical disjunctive sum.
    pub fn add(&mut self, g: GameId, h: GameId) -> GameId {
        if g == self.zero {
            return h;
        }
        if h == self.zero {
            return g;
        }
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.sums.get(&key) {
            return s;
        }
        if let (Some(a), Some(b)) = (self.as_integer(g), self.as_integer(h)) {
            let s = self.integer(a + b);
            self.sums.insert(key, s);
            return s;
        }
        let (gn, hn) = (&self.nodes[g.index()], &self.nodes[h.index()]);
        let (gl, gr) = (gn.left.clone(), gn.right.clone());
        let (hl, hr) = (hn.left.clone(), hn.right.clone());
        let mut left = Vec::with_capacity(gl.len() + hl.len());
        let mut right = Vec::with_capacity(gr.len() + hr.len());
        for &x in gl.iter() {
            left.push(self.add(x, h));
        }
        for &x in hl.iter() {
            left.push(self.add(g, x));
        }
        for &x in gr.iter() {
            right.push(self.add(x, h));
        }
        for &x in hr.iter() {
            right.push(self.add(g, x));
        }
        let s = self.construct(left, right);
        self.sums.insert(key, s);
        s
    }

    pub fn subtract(&mut self, g: GameId, h: GameId) -> GameId {
        let neg = self.negate(h);
        self.add(g, neg)
    }

    /// Sum of all games in `games`; `0` when empty.
    pub fn sum(&mut self, games: impl IntoIterator<Item = GameId>) -> GameId {
        games.into_iter().fold(self.zero, |acc, g| self.add(acc, g))
    }

    fn wins(&mut self, g: GameId) -> (bool, bool) {
        if let Some(w) = self.wins[g.index()] {
            return w;
        }
        let mut left_first = false;
        for k in 0..self.nodes[g.index()].left.len() {
            let gl = self.nodes[g.index()].left[k];
            if !self.wins(gl).1 {
                left_first = true;
                break;
            }
        }
        let mut right_first = false;
        for k in 0..self.nodes[g.index()].right.len() {
            let gr = self.nodes[g.index()].right[k];
            if !self.wins(gr).0 {
                right_first = true;
                break;
            }
        }
        self.wins[g.index()] = Some((left_first, right_first));
        (left_first, right_first)
    }

    /// Normal-play outcome by win search over the option tree.
    pub fn outcome(&mut self, g: GameId) -> Outcome {
        let (l, r) = self.wins(g);
        Outcome::from_wins(l, r)
    }

    /// The nim-heap `*n`.
    pub fn nimber(&mut self, n: u32) -> GameId {
        while self.nimbers.len() <= n as usize {
            let opts = self.nimbers.clone();
            let next = self.intern(opts.clone(), opts);
            self.nimbers.push(next);
        }
        self.nimbers[n as usize]
    }

    pub fn integer(&mut self, n: i64) -> GameId {
        let mut g = self.zero;
        for _ in 0..n.unsigned_abs() {
            g = if n > 0 {
                self.intern(vec![g], Vec::new())
            } else {
                self.intern(Vec::new(), vec![g])
            };
        }
        g
    }

    /// `Some(n)` iff `g` is the canonical integer `n`.
    pub fn as_integer(&self, g: GameId) -> Option<i64> {
        let mut cur = g;
        let mut n = 0i64;
        let mut sign = 0i64;
        loop {
            let node = &self.nodes[cur.index()];
            match (node.left.len(), node.right.len()) {
                (0, 0) => return Some(n),
                (1, 0) if sign >= 0 => {
                    sign = 1;
                    n += 1;
                    cur = node.left[0];
                }
                (0, 1) if sign <= 0 => {
                    sign = -1;
                    n -= 1;
                    cur = node.right[0];
                }
                _ => return None,
            }
        }
    }

    /// `k` copies of `^*`, plus `*` when `plus_star` is set.
    pub fn kupstar(&mut self, k: u32, plus_star: bool) -> GameId {
        let mut g = if plus_star { self.star } else { self.zero };
        for _ in 0..k {
            g = self.add(g, self.up_star);
        }
        g
    }

    /// Mirror image of [`Arena::kupstar`]: `k` copies of `v*`, plus optional `*`.
    pub fn kdownstar(&mut self, k: u32, plus_star: bool) -> GameId {
        let g = self.kupstar(k, plus_star);
        self.negate(g)
    }

    /// Every subposition has a Left move iff it has a Right move.
    pub fn is_all_small(&mut self, g: GameId) -> bool {
        if let Some(b) = self.all_small[g.index()] {
            return b;
        }
        let node = &self.nodes[g.index()];
        let mut result = node.left.is_empty() == node.right.is_empty();
        if result {
            let opts: Vec<GameId> = node.left.iter().chain(node.right.iter()).copied().collect();
            result = opts.into_iter().all(|o| self.is_all_small(o));
        }
        self.all_small[g.index()] = Some(result);
        result
    }

    fn ensure_aliases(&mut self, depth: u32) {
        while self.alias_depth < depth {
            let k = self.alias_depth + 1;
            for plus_star in [true, false] {
                let (up_name, down_name) = match (k, plus_star) {
                    (1, true) => ("^".to_string(), "v".to_string()),
                    (1, false) => ("^*".to_string(), "v*".to_string()),
                    (_, true) => (format!("{k}.^*+*"), format!("{k}.v*+*")),
                    (_, false) => (format!("{k}.^*"), format!("{k}.v*")),
                };
                let g = self.kupstar(k, plus_star);
                let n = self.negate(g);
                self.aliases.entry(g).or_insert(up_name);
                self.aliases.entry(n).or_insert(down_name);
            }
            self.alias_depth = k;
        }
    }

    /// Text form of `g`. Raw output follows the value grammar exactly;
    /// `pretty` additionally names the `^`/`v` families.
    pub fn format_value(&mut self, g: GameId, pretty: bool) -> String {
        if !pretty {
            return self.nodes[g.index()].text.to_string();
        }
        // k.^* and k.^*+* are born on day k + 1
        self.ensure_aliases(self.birthday(g));
        let mut out = String::new();
        self.write_pretty(&mut out, g);
        out
    }

    fn write_pretty(&self, out: &mut String, g: GameId) {
        let node = &self.nodes[g.index()];
        if node.nim.is_some() {
            out.push_str(&node.text);
        } else if let Some(alias) = self.aliases.get(&g) {
            out.push_str(alias);
        } else {
            out.push('{');
            for (i, &o) in node.left.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                self.write_pretty(out, o);
            }
            out.push('|');
            for (i, &o) in node.right.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                self.write_pretty(out, o);
            }
            out.push('}');
        }
    }

    /// Parses the value grammar: `0`, `*`, `*n`, or `{list|list}`.
    pub fn parse_value(&mut self, text: &str) -> Result<GameId> {
        let mut parser = ValueParser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let g = parser.value(self)?;
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(g)
    }
}

struct ValueParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl ValueParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn value(&mut self, arena: &mut Arena) -> Result<GameId> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(arena.zero())
            }
            Some(b'*') => {
                self.pos += 1;
                let start = self.pos;
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Ok(arena.star());
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let n: u32 = digits.parse().map_err(|_| Error::Syntax {
                    pos: start,
                    msg: format!("nim-heap size {digits} out of range"),
                })?;
                Ok(arena.nimber(n))
            }
            Some(b'{') => {
                self.pos += 1;
                let left = self.list(arena, b'|')?;
                self.pos += 1;
                let right = self.list(arena, b'}')?;
                self.pos += 1;
                Ok(arena.construct(left, right))
            }
            Some(_) => Err(self.error("expected '0', '*' or '{'")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    /// Parses a possibly empty comma list; leaves `pos` on the terminator.
    fn list(&mut self, arena: &mut Arena, terminator: u8) -> Result<Vec<GameId>> {
        let mut out = Vec::new();
        if self.peek() == Some(terminator) {
            return Ok(out);
        }
        loop {
            out.push(self.value(arena)?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(c) if c == terminator => return Ok(out),
                _ => return Err(self.error(&format!("expected ',' or '{}'", terminator as char))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_partial_order() {
        use Outcome::*;
        assert!(L > P && P > R && L > N && N > R);
        assert_eq!(N.partial_cmp(&P), None);
        assert_eq!(P.partial_cmp(&N), None);
        assert!(L > R);
    }

    #[test]
    fn basic_values() {
        let mut a = Arena::new();
        let zero = a.construct([], []);
        assert_eq!(zero, a.zero());
        let star = a.construct([zero], [zero]);
        assert_eq!(star, a.star());
        assert_eq!(a.format_value(star, false), "*");

        // ^* keeps both Left options
        let up_star = a.construct([zero, star], [zero]);
        assert_eq!(a.left_options(up_star).len(), 2);
        assert_eq!(a.right_options(up_star), &[zero]);
        assert_eq!(a.format_value(up_star, false), "{0,*|0}");
    }

    #[test]
    fn negation() {
        let mut a = Arena::new();
        let zero = a.zero();
        assert_eq!(a.negate(zero), zero);
        let star = a.star();
        assert_eq!(a.negate(star), star);
        let up = a.up();
        let down = a.construct([star], [zero]);
        assert_eq!(a.negate(up), down);
    }

    #[test]
    fn sums() {
        let mut a = Arena::new();
        let (star, up, up_star) = (a.star(), a.up(), a.up_star());
        assert_eq!(a.add(star, star), a.zero());
        assert_eq!(a.add(up, star), up_star);
        assert_eq!(a.add(up_star, star), up);
    }

    #[test]
    fn comparisons() {
        let mut a = Arena::new();
        let (zero, star, up) = (a.zero(), a.star(), a.up());
        assert_eq!(a.compare(star, star), Comparison::Equivalent);
        assert_eq!(a.compare(up, zero), Comparison::Greater);
        assert_eq!(a.compare(zero, up), Comparison::Less);
        assert_eq!(a.compare(up, star), Comparison::Fuzzy);
    }

    #[test]
    fn outcomes() {
        let mut a = Arena::new();
        let (zero, star) = (a.zero(), a.star());
        assert_eq!(a.outcome(zero), Outcome::P);
        assert_eq!(a.outcome(star), Outcome::N);
        let dup_star = a.kupstar(2, true);
        assert_eq!(a.outcome(dup_star), Outcome::L);
        let up = a.up();
        let up_star = a.up_star();
        assert_eq!(a.outcome(up), Outcome::L);
        assert_eq!(a.outcome(up_star), Outcome::N);
    }

    #[test]
    fn nimbers() {
        let mut a = Arena::new();
        assert_eq!(a.nimber(0), a.zero());
        assert_eq!(a.nimber(1), a.star());
        let s2 = a.nimber(2);
        assert_eq!(a.format_value(s2, false), "*2");
        let (zero, star) = (a.zero(), a.star());
        assert_eq!(a.construct([zero, star], [zero, star]), s2);
        // *2 + *3 = *1
        let s3 = a.nimber(3);
        assert_eq!(a.add(s2, s3), star);
        assert_eq!(a.birthday(s3), 3);
    }

    #[test]
    fn integers() {
        let mut a = Arena::new();
        assert_eq!(a.integer(0), a.zero());
        let one = a.integer(1);
        assert_eq!(a.format_value(one, false), "{0|}");
        let m2 = a.integer(-2);
        assert_eq!(a.format_value(m2, false), "{|{|0}}");
        for n in -6..=6 {
            let g = a.integer(n);
            assert_eq!(a.as_integer(g), Some(n));
        }
        let star = a.star();
        assert_eq!(a.as_integer(star), None);
        // generic sum of integers simplifies to the canonical integer
        let three = a.integer(3);
        let m5 = a.integer(-5);
        let node = a.construct([three], [m5]);
        assert_eq!(a.as_integer(node), None);
        let left = a.construct([three], []);
        assert_eq!(a.as_integer(left), Some(4));
        // {-1 | 1} = 0
        let m1 = a.integer(-1);
        let zero = a.construct([m1], [one]);
        assert_eq!(zero, a.zero());
    }

    #[test]
    fn kupstar_family() {
        let mut a = Arena::new();
        assert_eq!(a.kupstar(0, false), a.zero());
        assert_eq!(a.kupstar(0, true), a.star());
        assert_eq!(a.kupstar(1, true), a.up());
        let up = a.up();
        let triple_up = a.sum([up, up, up]);
        assert_eq!(a.kupstar(3, true), triple_up);
        for k in 1..=8 {
            let prev = a.kupstar(k - 1, true);
            let zero = a.zero();
            let expected = a.construct([zero], [prev]);
            assert_eq!(a.kupstar(k, true), expected, "k = {k}");
        }
    }

    #[test]
    fn all_small() {
        let mut a = Arena::new();
        let star = a.star();
        assert!(a.is_all_small(star));
        let one = a.integer(1);
        assert!(!a.is_all_small(one));
        let g = a.kupstar(2, true);
        assert!(a.is_all_small(g));
    }

    #[test]
    fn formatting() {
        let mut a = Arena::new();
        let zero = a.zero();
        assert_eq!(a.format_value(zero, false), "0");
        let up = a.up();
        assert_eq!(a.format_value(up, true), "^");
        assert_eq!(a.format_value(up, false), "{0|*}");
        let down = a.down();
        assert_eq!(a.format_value(down, true), "v");
        let g = a.kupstar(2, true);
        assert_eq!(a.format_value(g, true), "2.^*+*");
        let g = a.kdownstar(3, false);
        assert_eq!(a.format_value(g, true), "3.v*");
        let us = a.up_star();
        assert_eq!(a.format_value(us, true), "^*");
        let (star, down) = (a.star(), a.down());
        let pm = a.construct([star, up], [star, down]);
        assert_eq!(a.format_value(pm, true), "{*,^|*,v}");
    }

    #[test]
    fn parsing() {
        let mut a = Arena::new();
        assert_eq!(a.parse_value("*").unwrap(), a.star());
        assert_eq!(a.parse_value("{0|*}").unwrap(), a.up());
        let s2 = a.nimber(2);
        assert_eq!(a.parse_value("{0,*|0,*}").unwrap(), s2);
        assert_eq!(a.parse_value("*2").unwrap(), s2);
        assert_eq!(a.parse_value("{|}").unwrap(), a.zero());
        // non-canonical input is simplified
        assert_eq!(a.parse_value("{0,*|0,*,{0|*}}").unwrap(), s2);

        for bad in ["", "{", "{0|", "{0|*", "x", "{0;*}", "*|", "0 "] {
            assert!(
                matches!(a.parse_value(bad), Err(Error::Syntax { .. })),
                "{bad:?} should fail"
            );
        }
        match a.parse_value("{0,|0}") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
    }
}
