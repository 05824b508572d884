//! BW-ladder diagrams: sequences of black edges (hooks, two crossings of the
//! strand pair at their endpoints) and white edges (adjacent half twists, one
//! crossing plus a position swap) over n vertical segments, together with the
//! nine local moves that connect them.
//!
//! A B-ladder encodes an upper-triangular (0,2)-matrix; a W-ladder is a
//! positive braid word. The moves preserve the evaluation (contribution
//! matrix and permutation), so rewriting a B-ladder into a W-ladder realizes
//! its matrix as the CN matrix of a braid diagram.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use thiserror::Error;

use crate::braid::{BraidWord, Letter, Permutation, Sign};
use crate::matrix::SquareMatrix;

/// One horizontal edge. Black edges join any two segments `i < j`; white
/// edges join adjacent segments only. Indices are 1-based like generator
/// indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderEdge {
    Black { i: usize, j: usize },
    White { i: usize },
}

impl LadderEdge {
    pub fn black(i: usize, j: usize) -> LadderEdge {
        LadderEdge::Black { i, j }
    }

    pub fn white(i: usize) -> LadderEdge {
        LadderEdge::White { i }
    }
}

impl fmt::Display for LadderEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LadderEdge::Black { i, j } => write!(f, "B{i},{j}"),
            LadderEdge::White { i } => write!(f, "W{i}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LadderError {
    #[error("bad ladder token `{0}` (expected B<i>,<j> or W<i>)")]
    BadToken(String),
    #[error("edge {edge} out of range on {n} segments")]
    EdgeOutOfRange { edge: String, n: usize },
    #[error("hook column needs 1 <= k < l <= n, got k={k}, l={l}, n={n}")]
    HookBounds { n: usize, l: usize, k: usize },
    #[error("black edge at position {at}: only W-ladders translate to words")]
    BlackEdgePresent { at: usize },
    #[error("entry ({0},{1}) is not 0 or 2")]
    EntryNotZeroTwo(usize, usize),
    #[error("nonzero entry ({0},{1}) on or below the diagonal")]
    LowerEntry(usize, usize),
}

/// Ordering policy for the black edges of a B-ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// Row by row, left to right. On a matrix of bandwidth 2 this is the
    /// interleaved order `B1,2 B1,3 B2,3 B2,4 B3,4 ...` used by the banded
    /// rewriting route.
    #[default]
    RowMajor,
    /// Column by column, top index descending: `Bl-1,l Bl-2,l ... Bk,l`.
    /// The order the hook-column expansion starts from.
    ColumnHook,
}

/// A BW-ladder diagram: `n` vertical segments and edges read top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LadderDiagram {
    n: usize,
    edges: Vec<LadderEdge>,
}

/// Result of sweeping a ladder: the symmetric crossing-count contribution per
/// strand pair, and the strand-start to strand-end permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderEval {
    pub contribution: SquareMatrix,
    pub perm: Permutation,
}

impl LadderDiagram {
    pub fn new(n: usize, edges: Vec<LadderEdge>) -> Result<LadderDiagram, LadderError> {
        assert!(n >= 1, "a ladder has at least one segment");
        for e in &edges {
            let ok = match *e {
                LadderEdge::Black { i, j } => i >= 1 && i < j && j <= n,
                LadderEdge::White { i } => i >= 1 && i + 1 <= n,
            };
            if !ok {
                return Err(LadderError::EdgeOutOfRange { edge: e.to_string(), n });
            }
        }
        Ok(LadderDiagram { n, edges })
    }

    pub fn empty(n: usize) -> LadderDiagram {
        assert!(n >= 1);
        LadderDiagram { n, edges: Vec::new() }
    }

    /// Parse whitespace-separated `B<i>,<j>` and `W<i>` tokens. The segment
    /// count is `n`, or the largest endpoint mentioned when absent.
    pub fn parse(text: &str, n: Option<usize>) -> Result<LadderDiagram, LadderError> {
        let mut edges = Vec::new();
        let mut max_endpoint = 1usize;
        for tok in text.split_whitespace() {
            let bad = || LadderError::BadToken(tok.to_string());
            let (kind, rest) = tok.split_at(1);
            let edge = match kind {
                "B" | "b" => {
                    let (i, j) = rest.split_once(',').ok_or_else(bad)?;
                    let i: usize = i.parse().map_err(|_| bad())?;
                    let j: usize = j.parse().map_err(|_| bad())?;
                    max_endpoint = max_endpoint.max(j);
                    LadderEdge::Black { i, j }
                }
                "W" | "w" => {
                    let i: usize = rest.parse().map_err(|_| bad())?;
                    max_endpoint = max_endpoint.max(i + 1);
                    LadderEdge::White { i }
                }
                _ => return Err(bad()),
            };
            edges.push(edge);
        }
        LadderDiagram::new(n.unwrap_or(max_endpoint), edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[LadderEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_w_ladder(&self) -> bool {
        self.edges.iter().all(|e| matches!(e, LadderEdge::White { .. }))
    }

    /// Sweep top to bottom. A white edge adds one crossing to the strand pair
    /// currently at its two positions and swaps them; a black edge adds two
    /// crossings to the strands at its endpoint positions without swapping.
    pub fn eval(&self) -> LadderEval {
        fn bump(m: &mut SquareMatrix, a: usize, b: usize, v: i64) {
            m.add_at(a, b, v);
            m.add_at(b, a, v);
        }
        let mut pos_to_strand: Vec<usize> = (0..self.n).collect();
        let mut contribution = SquareMatrix::zeros(self.n);
        for e in &self.edges {
            match *e {
                LadderEdge::White { i } => {
                    let (a, b) = (pos_to_strand[i - 1], pos_to_strand[i]);
                    bump(&mut contribution, a, b, 1);
                    pos_to_strand.swap(i - 1, i);
                }
                LadderEdge::Black { i, j } => {
                    let (a, b) = (pos_to_strand[i - 1], pos_to_strand[j - 1]);
                    bump(&mut contribution, a, b, 2);
                }
            }
        }
        let mut images = vec![0usize; self.n];
        for (pos, &strand) in pos_to_strand.iter().enumerate() {
            images[strand] = pos;
        }
        LadderEval {
            contribution,
            perm: Permutation::from_images(images).expect("tracing yields a bijection"),
        }
    }

    /// Transliterate a W-ladder: each white edge becomes a positive letter.
    /// The word's CN matrix equals the ladder's contribution and its braid
    /// permutation equals the ladder's permutation.
    pub fn to_braid_word(&self) -> Result<BraidWord, LadderError> {
        let mut letters = Vec::with_capacity(self.edges.len());
        for (at, e) in self.edges.iter().enumerate() {
            match *e {
                LadderEdge::White { i } => letters.push(Letter::new(i, Sign::Positive)),
                LadderEdge::Black { .. } => return Err(LadderError::BlackEdgePresent { at }),
            }
        }
        Ok(BraidWord::new(self.n, letters).expect("edge bounds imply letter bounds"))
    }

    /// The B-ladder of an upper-triangular (0,2)-matrix: one black edge per
    /// 2-entry, in the chosen order.
    pub fn b_ladder(m: &SquareMatrix, order: EdgeOrder) -> Result<LadderDiagram, LadderError> {
        let n = m.n();
        for i in 0..n {
            for j in 0..n {
                let v = m.get(i, j);
                if v != 0 && j <= i {
                    return Err(LadderError::LowerEntry(i + 1, j + 1));
                }
                if v != 0 && v != 2 {
                    return Err(LadderError::EntryNotZeroTwo(i + 1, j + 1));
                }
            }
        }
        let mut edges = Vec::new();
        match order {
            EdgeOrder::RowMajor => {
                for i in 0..n {
                    for j in i + 1..n {
                        if m.get(i, j) == 2 {
                            edges.push(LadderEdge::black(i + 1, j + 1));
                        }
                    }
                }
            }
            EdgeOrder::ColumnHook => {
                for j in 0..n {
                    for i in (0..j).rev() {
                        if m.get(i, j) == 2 {
                            edges.push(LadderEdge::black(i + 1, j + 1));
                        }
                    }
                }
            }
        }
        LadderDiagram::new(n.max(1), edges)
    }

    /// Search for a move-equivalent W-ladder, breadth first over move
    /// applications with visited-state memoization, expanding at most
    /// `budget` states. Absence within the budget is a value, not an error.
    pub fn rewrite_to_w(&self, budget: usize) -> Option<LadderDiagram> {
        assert!(budget > 0, "rewrite needs a positive budget");
        if self.is_w_ladder() {
            return Some(self.clone());
        }
        // Any W-ladder is a braid diagram, so its contribution is a CN matrix
        // and therefore T0; a non-T0 contribution can never rewrite fully.
        if !self.eval().contribution.is_t0() {
            return None;
        }
        let mut seen: HashSet<Vec<LadderEdge>> = HashSet::new();
        let mut queue: VecDeque<Vec<LadderEdge>> = VecDeque::new();
        seen.insert(self.edges.clone());
        queue.push_back(self.edges.clone());
        let mut expanded = 0usize;
        while let Some(state) = queue.pop_front() {
            if expanded >= budget {
                return None;
            }
            expanded += 1;
            let diagram = LadderDiagram { n: self.n, edges: state };
            for next in diagram.successor_states() {
                if !seen.insert(next.clone()) {
                    continue;
                }
                if next.iter().all(|e| matches!(e, LadderEdge::White { .. })) {
                    return Some(LadderDiagram { n: self.n, edges: next });
                }
                queue.push_back(next);
            }
        }
        None
    }

    /// All single-move neighbours, in a fixed order: L1 first, then the
    /// root-sliding moves L6 to L9, then the commutations.
    fn successor_states(&self) -> Vec<Vec<LadderEdge>> {
        const PREFERENCE: [MoveRule; 9] = [
            MoveRule::L1,
            MoveRule::L9,
            MoveRule::L8,
            MoveRule::L7,
            MoveRule::L6,
            MoveRule::L4,
            MoveRule::L2,
            MoveRule::L3,
            MoveRule::L5,
        ];
        let mut out = Vec::new();
        for at in 0..self.edges.len() {
            for rule in PREFERENCE {
                for reversed in [false, true] {
                    if let Ok(next) = self.apply_move(Move { rule, at, reversed }) {
                        out.push(next.edges);
                    }
                }
            }
        }
        out
    }

    /// Apply one ladder move at the given edge position. The evaluation is
    /// unchanged by every move.
    pub fn apply_move(&self, mv: Move) -> Result<LadderDiagram, MoveError> {
        use LadderEdge::{Black, White};
        let at = mv.at;
        let need = match (mv.rule, mv.reversed) {
            (MoveRule::L1, false) => 1,
            (MoveRule::L4, _) => 3,
            _ => 2,
        };
        if at + need > self.edges.len() {
            return Err(MoveError::OutOfRange { at, need, len: self.edges.len() });
        }
        let mismatch = || MoveError::PatternMismatch { rule: mv.rule, reversed: mv.reversed, at };
        let condition =
            |detail: &'static str| MoveError::SideCondition { rule: mv.rule, at, detail };
        let window = &self.edges[at..at + need];
        let replacement: Vec<LadderEdge> = match (mv.rule, mv.reversed) {
            (MoveRule::L1, false) => match window {
                &[Black { i, j }] => {
                    if j != i + 1 {
                        return Err(condition("needs an adjacent hook, j = i+1"));
                    }
                    vec![White { i }, White { i }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L1, true) => match window {
                &[White { i }, White { i: i2 }] => {
                    if i != i2 {
                        return Err(condition("needs two equal white edges"));
                    }
                    vec![Black { i, j: i + 1 }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L2, _) => match window {
                &[Black { i, j }, Black { i: k, j: l }] => {
                    vec![Black { i: k, j: l }, Black { i, j }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L3, _) => match window {
                &[White { i: k }, White { i: l }] => {
                    if k.abs_diff(l) < 2 {
                        return Err(condition("needs k+1 < l or l+1 < k"));
                    }
                    vec![White { i: l }, White { i: k }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L4, reversed) => match window {
                &[White { i: a }, White { i: b }, White { i: a2 }] => {
                    if a != a2 {
                        return Err(condition("needs the pattern W(x) W(y) W(x)"));
                    }
                    let fits = if reversed { a == b + 1 } else { b == a + 1 };
                    if !fits {
                        return Err(condition("needs adjacent indices, y = x+1"));
                    }
                    vec![White { i: b }, White { i: a }, White { i: b }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L5, reversed) => {
                let (black, white, rebuilt): ((usize, usize), usize, fn((usize, usize), usize) -> Vec<LadderEdge>) =
                    match (window, reversed) {
                        (&[Black { i, j }, White { i: k }], false) => ((i, j), k, |b, w| {
                            vec![White { i: w }, Black { i: b.0, j: b.1 }]
                        }),
                        (&[White { i: k }, Black { i, j }], true) => ((i, j), k, |b, w| {
                            vec![Black { i: b.0, j: b.1 }, White { i: w }]
                        }),
                        _ => return Err(mismatch()),
                    };
                let (i, j) = black;
                let k = white;
                let disjoint = j < k || k + 1 < i || (i < k && k + 1 < j);
                if !disjoint {
                    return Err(condition("needs j < k, k+1 < i, or i < k < k+1 < j"));
                }
                rebuilt(black, white)
            }
            (MoveRule::L6, false) => match window {
                &[Black { i, j }, White { i: w }] if w == i => {
                    if i + 1 >= j {
                        return Err(condition("needs i+1 < j"));
                    }
                    vec![White { i }, Black { i: i + 1, j }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L6, true) => match window {
                &[White { i: w }, Black { i, j }] if i == w + 1 => {
                    vec![Black { i: w, j }, White { i: w }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L7, false) => match window {
                &[White { i: w }, Black { i, j }] if w == i => {
                    if i + 1 >= j {
                        return Err(condition("needs i+1 < j"));
                    }
                    vec![Black { i: i + 1, j }, White { i }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L7, true) => match window {
                &[Black { i, j }, White { i: w }] if i == w + 1 => {
                    vec![White { i: w }, Black { i: w, j }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L8, false) => match window {
                &[Black { i, j }, White { i: w }] if w + 1 == j => {
                    if i >= j - 1 {
                        return Err(condition("needs i < j-1"));
                    }
                    vec![White { i: w }, Black { i, j: j - 1 }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L8, true) => match window {
                &[White { i: w }, Black { i, j }] if j == w => {
                    vec![Black { i, j: j + 1 }, White { i: w }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L9, false) => match window {
                &[White { i: w }, Black { i, j }] if w + 1 == j => {
                    if i >= j - 1 {
                        return Err(condition("needs i < j-1"));
                    }
                    vec![Black { i, j: j - 1 }, White { i: w }]
                }
                _ => return Err(mismatch()),
            },
            (MoveRule::L9, true) => match window {
                &[Black { i, j }, White { i: w }] if j == w => {
                    vec![White { i: w }, Black { i, j: j + 1 }]
                }
                _ => return Err(mismatch()),
            },
        };
        let mut edges = Vec::with_capacity(self.edges.len() + replacement.len() - need);
        edges.extend_from_slice(&self.edges[..at]);
        edges.extend_from_slice(&replacement);
        edges.extend_from_slice(&self.edges[at + need..]);
        LadderDiagram::new(self.n, edges)
            .map_err(|_| MoveError::SideCondition { rule: mv.rule, at, detail: "edge out of range" })
    }

    /// Deterministic ASCII picture: segments as columns, edges as rungs with
    /// `*` (black) or `o` (white) end markers.
    pub fn render(&self) -> String {
        let width = 3 * (self.n - 1) + 1;
        let col = |i: usize| 3 * (i - 1);
        let pipes = {
            let mut row = vec![' '; width];
            for i in 1..=self.n {
                row[col(i)] = '|';
            }
            row
        };
        let mut out = String::new();
        for i in 1..=self.n {
            if i > 1 {
                out.push_str("  ");
            }
            out.push_str(&i.to_string());
        }
        out.push('\n');
        out.extend(pipes.iter());
        out.push('\n');
        for e in &self.edges {
            let mut row = pipes.clone();
            let (a, b, marker) = match *e {
                LadderEdge::Black { i, j } => (i, j, '*'),
                LadderEdge::White { i } => (i, i + 1, 'o'),
            };
            for x in col(a)..=col(b) {
                row[x] = '-';
            }
            row[col(a)] = marker;
            row[col(b)] = marker;
            out.extend(row.iter());
            out.push('\n');
            out.extend(pipes.iter());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for LadderDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.edges {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// The W-ladder `W(l-1) W(l-2) ... W(k) W(k) ... W(l-2) W(l-1)` on `n`
/// segments: the palindromic expansion of the hook column on column `l` with
/// rows `k..l-1`. Its evaluation has the identity permutation and
/// contribution 2 at every pair `(m, l)` with `k <= m < l`.
pub fn hook_column_expand(n: usize, l: usize, k: usize) -> Result<LadderDiagram, LadderError> {
    if !(1 <= k && k < l && l <= n) {
        return Err(LadderError::HookBounds { n, l, k });
    }
    let mut edges = Vec::with_capacity(2 * (l - k));
    for i in (k..l).rev() {
        edges.push(LadderEdge::white(i));
    }
    for i in k..l {
        edges.push(LadderEdge::white(i));
    }
    LadderDiagram::new(n, edges)
}

/// The hook column `B(l-1,l) B(l-2,l) ... B(k,l)` as a B-ladder on `n`
/// segments: the starting point of the expansion.
pub fn hook_column_ladder(n: usize, l: usize, k: usize) -> Result<LadderDiagram, LadderError> {
    if !(1 <= k && k < l && l <= n) {
        return Err(LadderError::HookBounds { n, l, k });
    }
    let edges = (k..l).rev().map(|i| LadderEdge::black(i, l)).collect();
    LadderDiagram::new(n, edges)
}

/// The explicit move sequence that carries [`hook_column_ladder`] to
/// [`hook_column_expand`]: split the innermost adjacent hook with L1, then
/// slide the freed half twist rightward across the remaining hooks with L9,
/// and recurse on the shortened column.
pub fn hook_column_moves(n: usize, l: usize, k: usize) -> Result<Vec<Move>, LadderError> {
    if !(1 <= k && k < l && l <= n) {
        return Err(LadderError::HookBounds { n, l, k });
    }
    let mut moves = Vec::new();
    fn plan(offset: usize, l: usize, k: usize, moves: &mut Vec<Move>) {
        moves.push(Move { rule: MoveRule::L1, at: offset, reversed: false });
        let hooks = l - k;
        for t in 0..hooks - 1 {
            moves.push(Move { rule: MoveRule::L9, at: offset + 1 + t, reversed: false });
        }
        if hooks > 1 {
            plan(offset + 1, l - 1, k, moves);
        }
    }
    plan(0, l, k, &mut moves);
    Ok(moves)
}

/// The nine local moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveRule {
    /// `B(i,i+1) <-> W(i) W(i)`: an adjacent hook is a pair of half twists.
    L1,
    /// `B(i,j) B(k,l) <-> B(k,l) B(i,j)`: black edges commute.
    L2,
    /// `W(k) W(l) <-> W(l) W(k)` when `|k-l| >= 2`: distant half twists commute.
    L3,
    /// `W(i) W(i+1) W(i) <-> W(i+1) W(i) W(i+1)`: the braid relation.
    L4,
    /// `B(i,j) W(k) <-> W(k) B(i,j)` when all endpoints differ.
    L5,
    /// `B(i,j) W(i) <-> W(i) B(i+1,j)` when `i+1 < j`.
    L6,
    /// `W(i) B(i,j) <-> B(i+1,j) W(i)` when `i+1 < j`.
    L7,
    /// `B(i,j) W(j-1) <-> W(j-1) B(i,j-1)` when `i < j-1`.
    L8,
    /// `W(j-1) B(i,j) <-> B(i,j-1) W(j-1)` when `i < j-1`.
    L9,
}

impl MoveRule {
    pub const ALL: [MoveRule; 9] = [
        MoveRule::L1,
        MoveRule::L2,
        MoveRule::L3,
        MoveRule::L4,
        MoveRule::L5,
        MoveRule::L6,
        MoveRule::L7,
        MoveRule::L8,
        MoveRule::L9,
    ];

    pub fn parse(text: &str) -> Option<MoveRule> {
        let up = text.to_ascii_uppercase();
        MoveRule::ALL.into_iter().find(|r| format!("{r:?}") == up)
    }
}

impl fmt::Display for MoveRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A move application site: rule, edge position, and direction. `reversed`
/// applies the rule right to left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub rule: MoveRule,
    pub at: usize,
    pub reversed: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("position {at} needs {need} edges but only {len} are present")]
    OutOfRange { at: usize, need: usize, len: usize },
    #[error("{rule}{} does not match the edges at position {at}", if *.reversed { " (reversed)" } else { "" })]
    PatternMismatch { rule: MoveRule, reversed: bool, at: usize },
    #[error("{rule} at position {at}: side condition violated, {detail}")]
    SideCondition { rule: MoveRule, at: usize, detail: &'static str },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ladder(text: &str, n: usize) -> LadderDiagram {
        LadderDiagram::parse(text, Some(n)).unwrap()
    }

    fn fwd(rule: MoveRule, at: usize) -> Move {
        Move { rule, at, reversed: false }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let l = ladder("B1,3 W2 W2", 4);
        assert_eq!(l.to_string(), "B1,3 W2 W2");
        assert_eq!(LadderDiagram::parse("B1,3 W2", None).unwrap().n(), 3);
        assert!(LadderDiagram::parse("B3,1", Some(4)).is_err());
        assert!(LadderDiagram::parse("X2", Some(4)).is_err());
        assert!(LadderDiagram::parse("W4", Some(4)).is_err());
        assert!(LadderDiagram::parse("B1,5", Some(4)).is_err());
    }

    #[test]
    fn eval_examples() {
        let hook = ladder("B1,2", 2).eval();
        assert_eq!(hook.contribution.get(0, 1), 2);
        assert!(hook.perm.is_identity());

        let twists = ladder("W1 W1", 2).eval();
        assert_eq!(twists.contribution.get(0, 1), 2);
        assert!(twists.perm.is_identity());

        let palindrome = ladder("W2 W1 W1 W2", 3).eval();
        assert_eq!(palindrome.contribution.get(0, 2), 2);
        assert_eq!(palindrome.contribution.get(1, 2), 2);
        assert_eq!(palindrome.contribution.get(0, 1), 0);
        assert!(palindrome.perm.is_identity());
        assert_eq!(ladder("B2,3 B1,3", 3).eval(), palindrome);
    }

    #[test]
    fn w_ladder_detection() {
        assert!(LadderDiagram::empty(3).is_w_ladder());
        assert!(ladder("W2", 3).is_w_ladder());
        assert!(!ladder("B1,3", 3).is_w_ladder());
    }

    #[test]
    fn move_l1() {
        let l = ladder("B1,2", 2);
        assert_eq!(l.apply_move(fwd(MoveRule::L1, 0)).unwrap().to_string(), "W1 W1");
        let back = ladder("W1 W1", 2);
        assert_eq!(
            back.apply_move(Move { rule: MoveRule::L1, at: 0, reversed: true }).unwrap(),
            l
        );
        // B1,3 has no adjacent hook: side condition, not pattern mismatch
        assert!(matches!(
            ladder("B1,3", 3).apply_move(fwd(MoveRule::L1, 0)),
            Err(MoveError::SideCondition { rule: MoveRule::L1, .. })
        ));
    }

    #[test]
    fn move_l6() {
        let l = ladder("B1,3 W1", 3);
        assert_eq!(l.apply_move(fwd(MoveRule::L6, 0)).unwrap().to_string(), "W1 B2,3");
        // and back
        let r = ladder("W1 B2,3", 3);
        assert_eq!(
            r.apply_move(Move { rule: MoveRule::L6, at: 0, reversed: true }).unwrap(),
            l
        );
        // adjacent hook fails the side condition i+1 < j
        assert!(matches!(
            ladder("B1,2 W1", 2).apply_move(fwd(MoveRule::L6, 0)),
            Err(MoveError::SideCondition { rule: MoveRule::L6, .. })
        ));
        assert!(matches!(
            ladder("B1,3 W2", 3).apply_move(fwd(MoveRule::L6, 0)),
            Err(MoveError::PatternMismatch { .. })
        ));
    }

    #[test]
    fn move_l4() {
        let l = ladder("W1 W2 W1", 3);
        assert_eq!(l.apply_move(fwd(MoveRule::L4, 0)).unwrap().to_string(), "W2 W1 W2");
        assert!(matches!(
            ladder("W1 W3 W1", 4).apply_move(fwd(MoveRule::L4, 0)),
            Err(MoveError::SideCondition { .. })
        ));
    }

    #[test]
    fn move_l5_needs_disjoint_endpoints() {
        let l = ladder("B1,2 W3", 4);
        assert_eq!(l.apply_move(fwd(MoveRule::L5, 0)).unwrap().to_string(), "W3 B1,2");
        // white strictly inside the hook is allowed
        let inside = ladder("B1,4 W2", 4);
        assert_eq!(inside.apply_move(fwd(MoveRule::L5, 0)).unwrap().to_string(), "W2 B1,4");
        // shared endpoint is not
        assert!(matches!(
            ladder("B1,3 W3", 4).apply_move(fwd(MoveRule::L5, 0)),
            Err(MoveError::SideCondition { .. })
        ));
        assert!(matches!(
            ladder("W1 W2", 3).apply_move(fwd(MoveRule::L5, 0)),
            Err(MoveError::PatternMismatch { .. })
        ));
    }

    #[test]
    fn move_out_of_range() {
        assert!(matches!(
            ladder("B1,2", 2).apply_move(fwd(MoveRule::L2, 0)),
            Err(MoveError::OutOfRange { .. })
        ));
    }

    #[test]
    fn moves_preserve_eval() {
        // one applicable instance per rule, forward and backward
        let cases = [
            ("B2,3 W1 B1,4 W2 B1,2", 4),
            ("W1 W1 W2 W2 W3 B1,4 W3", 4),
            ("B1,3 W1 W2 W1 B2,4 W3 B1,2 B2,3", 4),
        ];
        for (text, n) in cases {
            let l = ladder(text, n);
            let before = l.eval();
            for at in 0..l.len() {
                for rule in MoveRule::ALL {
                    for reversed in [false, true] {
                        if let Ok(next) = l.apply_move(Move { rule, at, reversed }) {
                            assert_eq!(next.eval(), before, "{rule} at {at} rev={reversed} on {text}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hook_column_expansion() {
        let l = hook_column_expand(5, 5, 2).unwrap();
        assert_eq!(l.to_string(), "W4 W3 W2 W2 W3 W4");
        assert_eq!(hook_column_expand(2, 2, 1).unwrap().to_string(), "W1 W1");
        assert!(hook_column_expand(4, 5, 1).is_err());
        assert!(hook_column_expand(4, 2, 2).is_err());

        let expanded = hook_column_expand(5, 5, 2).unwrap().eval();
        assert_eq!(hook_column_ladder(5, 5, 2).unwrap().eval(), expanded);
        assert!(expanded.perm.is_identity());
        for m in 1..4 {
            assert_eq!(expanded.contribution.get(m, 4), 2);
        }
    }

    #[test]
    fn hook_column_replay_matches_expansion() {
        for n in 2..=6 {
            for l in 2..=n {
                for k in 1..l {
                    let mut state = hook_column_ladder(n, l, k).unwrap();
                    let before = state.eval();
                    for mv in hook_column_moves(n, l, k).unwrap() {
                        state = state.apply_move(mv).unwrap();
                        assert_eq!(state.eval(), before);
                    }
                    assert_eq!(state, hook_column_expand(n, l, k).unwrap());
                }
            }
        }
    }

    #[test]
    fn b_ladder_construction() {
        assert!(LadderDiagram::b_ladder(&SquareMatrix::zeros(3), EdgeOrder::RowMajor)
            .unwrap()
            .is_empty());
        let m = SquareMatrix::from_rows(vec![vec![0, 0, 2], vec![0, 0, 2], vec![0, 0, 0]]).unwrap();
        assert_eq!(
            LadderDiagram::b_ladder(&m, EdgeOrder::RowMajor).unwrap().to_string(),
            "B1,3 B2,3"
        );
        assert_eq!(
            LadderDiagram::b_ladder(&m, EdgeOrder::ColumnHook).unwrap().to_string(),
            "B2,3 B1,3"
        );
        let bad = SquareMatrix::from_rows(vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(
            LadderDiagram::b_ladder(&bad, EdgeOrder::RowMajor),
            Err(LadderError::EntryNotZeroTwo(1, 2))
        ));
        let lower = SquareMatrix::from_rows(vec![vec![0, 0], vec![2, 0]]).unwrap();
        assert!(matches!(
            LadderDiagram::b_ladder(&lower, EdgeOrder::RowMajor),
            Err(LadderError::LowerEntry(2, 1))
        ));
    }

    #[test]
    fn banded_order_is_row_major() {
        // on a bandwidth-2 matrix, row-major already interleaves the edges
        let mut m = SquareMatrix::zeros(4);
        for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] {
            m.set(i, j, 2);
        }
        assert_eq!(
            LadderDiagram::b_ladder(&m, EdgeOrder::RowMajor).unwrap().to_string(),
            "B1,2 B1,3 B2,3 B2,4 B3,4"
        );
    }

    #[test]
    fn rewrite_simple_cases() {
        let one = ladder("B1,2", 2);
        assert_eq!(one.rewrite_to_w(100).unwrap().to_string(), "W1 W1");
        // a lone distant hook cannot become a W-ladder
        assert_eq!(ladder("B1,3", 3).rewrite_to_w(100_000), None);
        // already white
        let w = ladder("W1 W2", 3);
        assert_eq!(w.rewrite_to_w(10).unwrap(), w);
    }

    #[test]
    fn rewrite_five_strand_example() {
        // the 5x5 matrix with 2s at (1,2),(1,4),(2,3),(2,5),(3,4),(4,5)
        let mut m = SquareMatrix::zeros(5);
        for (i, j) in [(0, 1), (0, 3), (1, 2), (1, 4), (2, 3), (3, 4)] {
            m.set(i, j, 2);
        }
        let b = LadderDiagram::b_ladder(&m, EdgeOrder::RowMajor).unwrap();
        let before = b.eval();
        let w = b.rewrite_to_w(500_000).expect("rewrites within budget");
        assert!(w.is_w_ladder());
        assert_eq!(w.eval(), before);
    }

    #[test]
    fn w_ladder_to_word() {
        let w = ladder("W4 W3 W2 W2 W3 W4", 5);
        assert_eq!(w.to_braid_word().unwrap().to_string(), "4 3 2 2 3 4");
        assert!(LadderDiagram::empty(3).to_braid_word().unwrap().is_empty());
        assert!(matches!(
            ladder("B1,3", 3).to_braid_word(),
            Err(LadderError::BlackEdgePresent { at: 0 })
        ));
        // the word's CN matrix is the ladder's contribution
        let l = ladder("W2 W1 W1 W2", 3);
        let word = l.to_braid_word().unwrap();
        assert_eq!(word.cn_matrix(), l.eval().contribution);
        assert_eq!(word.permutation(), l.eval().perm);
    }

    #[test]
    fn render_golden() {
        let l = ladder("B1,3 W2", 3);
        let expected = "\
1  2  3
|  |  |
*-----*
|  |  |
|  o--o
|  |  |
";
        assert_eq!(l.render(), expected);
    }
}
