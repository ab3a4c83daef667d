//! Words over a graph's vertex set and the alternation semantics that
//! define word-representability.
//!
//! Two letters *alternate* in a word when the restriction of the word to
//! those letters has no equal adjacent pair; a word *represents* a graph
//! when alternation coincides with adjacency over all vertex pairs. The
//! bounded search [`find_word`] produces representability certificates at
//! desk scale; its failure under a cap is explicitly *not* a
//! non-representability proof.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A word whose letters are vertex ids of some graph.
///
/// Validity against a particular graph (letters in range, full alphabet
/// coverage) is checked where the word is used, not at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Word {
        Word { letters }
    }

    /// Parses a whitespace-separated list of vertex names against `g`.
    pub fn parse(text: &str, g: &Graph) -> Result<Word> {
        let letters = text
            .split_whitespace()
            .map(|name| g.vertex_by_name(name))
            .collect::<Result<Vec<usize>>>()?;
        Ok(Word { letters })
    }

    /// Renders the word as whitespace-separated vertex names of `g`.
    pub fn display(&self, g: &Graph) -> String {
        self.letters
            .iter()
            .map(|&v| g.name(v))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The set of distinct letters, as a bitmask.
    pub fn alphabet_mask(&self) -> u64 {
        self.letters.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// True iff the subsequence of `w` over `{x, y}` strictly alternates.
/// Projections of length 0 or 1 alternate vacuously.
pub fn alternates(w: &Word, x: usize, y: usize) -> Result<bool> {
    if x == y {
        return Err(Error::InvalidArgument(format!(
            "alternation needs two distinct letters, got {x} twice"
        )));
    }
    let mut prev = usize::MAX;
    for &c in &w.letters {
        if c == x || c == y {
            if c == prev {
                return Ok(false);
            }
            prev = c;
        }
    }
    Ok(true)
}

/// True iff `w` represents `g`: for every unordered vertex pair,
/// alternation in `w` coincides with adjacency in `g`.
///
/// Requires the alphabet of `w` to be exactly the vertex set of `g` (every
/// vertex occurs at least once, no out-of-range letters).
pub fn represents(w: &Word, g: &Graph) -> Result<bool> {
    let n = g.n();
    if let Some(&bad) = w.letters.iter().find(|&&c| c >= n) {
        return Err(Error::InvalidArgument(format!(
            "word contains letter {bad}, but the graph has vertices 0..{n}"
        )));
    }
    let missing: Vec<&str> = (0..n)
        .filter(|&v| w.alphabet_mask() >> v & 1 == 0)
        .map(|v| g.name(v))
        .collect();
    if !missing.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "word never uses vertex(es): {}",
            missing.join(", ")
        )));
    }
    for x in 0..n {
        for y in x + 1..n {
            if alternates(w, x, y)? != g.has_edge(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vertex-count guard for [`find_word`]'s exponential search.
pub const FIND_WORD_VERTEX_LIMIT: usize = 8;

/// Searches for a word representing `g` in which every letter occurs at
/// most `max_occurrences` times.
///
/// Iterative deepening on the total length (so the first hit is a shortest
/// certificate) with letters tried in ascending id order (so it is also
/// the lexicographically least of that length). `None` means only "no word
/// within the cap" — never non-representability.
pub fn find_word(g: &Graph, max_occurrences: usize) -> Result<Option<Word>> {
    let n = g.n();
    if n > FIND_WORD_VERTEX_LIMIT {
        return Err(Error::Capacity {
            what: "find_word vertex count",
            got: n,
            limit: FIND_WORD_VERTEX_LIMIT,
        });
    }
    if max_occurrences == 0 {
        return Err(Error::InvalidArgument(
            "occurrence cap must be at least 1".to_string(),
        ));
    }
    if n == 0 {
        return Ok(Some(Word::new(vec![])));
    }
    for target_len in n..=n * max_occurrences {
        let mut search = Search {
            g,
            n,
            cap: max_occurrences,
            target_len,
            letters: Vec::with_capacity(target_len),
            counts: [0; FIND_WORD_VERTEX_LIMIT],
            last_of_pair: [[NONE; FIND_WORD_VERTEX_LIMIT]; FIND_WORD_VERTEX_LIMIT],
            broken: [[false; FIND_WORD_VERTEX_LIMIT]; FIND_WORD_VERTEX_LIMIT],
        };
        if search.dfs() {
            let w = Word::new(search.letters);
            assert!(
                represents(&w, g)?,
                "internal error: search produced a non-representing word"
            );
            return Ok(Some(w));
        }
    }
    Ok(None)
}

const NONE: u8 = u8::MAX;

/// Depth-first state for one target length.
///
/// `last_of_pair[x][y]` is the letter of `{x,y}` seen most recently;
/// `broken[x][y]` records that the pair's projection already has a repeat.
/// Adjacent pairs must never break; nonadjacent pairs must break by the
/// end, which yields the two symmetric pruning rules below.
struct Search<'g> {
    g: &'g Graph,
    n: usize,
    cap: usize,
    target_len: usize,
    letters: Vec<usize>,
    counts: [usize; FIND_WORD_VERTEX_LIMIT],
    last_of_pair: [[u8; FIND_WORD_VERTEX_LIMIT]; FIND_WORD_VERTEX_LIMIT],
    broken: [[bool; FIND_WORD_VERTEX_LIMIT]; FIND_WORD_VERTEX_LIMIT],
}

impl Search<'_> {
    fn dfs(&mut self) -> bool {
        let depth = self.letters.len();
        if depth == self.target_len {
            return self.is_complete_solution();
        }
        let remaining = self.target_len - depth;
        let missing =
            (0..self.n).filter(|&v| self.counts[v] == 0).count();
        if missing > remaining {
            return false;
        }
        'letters: for c in 0..self.n {
            if self.counts[c] == self.cap {
                continue;
            }
            // An adjacent pair that repeats a letter can never recover.
            for b in 0..self.n {
                if b != c
                    && self.g.has_edge(b, c)
                    && self.last_of_pair[b][c] == c as u8
                {
                    continue 'letters;
                }
            }
            // A nonadjacent pair with both letters exhausted while still
            // alternating can never be broken later.
            if self.would_strand_nonadjacent(c) {
                continue 'letters;
            }
            self.push(c);
            if self.dfs() {
                return true;
            }
            self.pop(c);
        }
        false
    }

    /// Would pushing `c` exhaust it against some nonadjacent, already
    /// exhausted letter while their projection still alternates?
    fn would_strand_nonadjacent(&self, c: usize) -> bool {
        if self.counts[c] + 1 < self.cap {
            return false;
        }
        (0..self.n).any(|b| {
            b != c
                && !self.g.has_edge(b, c)
                && self.counts[b] == self.cap
                && !self.broken[b][c]
                && self.last_of_pair[b][c] != c as u8
        })
    }

    fn is_complete_solution(&self) -> bool {
        if (0..self.n).any(|v| self.counts[v] == 0) {
            return false;
        }
        for x in 0..self.n {
            for y in x + 1..self.n {
                // Adjacent pairs were kept alternating by the prune; the
                // nonadjacent ones must have broken somewhere.
                if !self.g.has_edge(x, y) && !self.broken[x][y] {
                    return false;
                }
            }
        }
        true
    }

    fn push(&mut self, c: usize) {
        self.letters.push(c);
        self.counts[c] += 1;
        for b in 0..self.n {
            if b == c {
                continue;
            }
            if self.last_of_pair[b][c] == c as u8 {
                self.broken[b][c] = true;
                self.broken[c][b] = true;
            }
            self.last_of_pair[b][c] = c as u8;
            self.last_of_pair[c][b] = c as u8;
        }
    }

    fn pop(&mut self, c: usize) {
        // Rebuild pair state for `c` from the remaining prefix; everything
        // else was untouched by this letter.
        self.letters.pop();
        self.counts[c] -= 1;
        for b in 0..self.n {
            if b == c {
                continue;
            }
            let (last, broken) = replay_pair(&self.letters, b, c);
            self.last_of_pair[b][c] = last;
            self.last_of_pair[c][b] = last;
            self.broken[b][c] = broken;
            self.broken[c][b] = broken;
        }
    }
}

/// Recomputes (last letter, broken?) for the pair `{b, c}` over `prefix`.
fn replay_pair(prefix: &[usize], b: usize, c: usize) -> (u8, bool) {
    let mut last = NONE;
    let mut broken = false;
    for &z in prefix {
        if z == b || z == c {
            if last == z as u8 {
                broken = true;
            }
            last = z as u8;
        }
    }
    (last, broken)
}
