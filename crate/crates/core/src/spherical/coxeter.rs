//! Todd-Coxeter coset enumeration over the trivial subgroup.
//!
//! This computes the order of a finitely presented group from its
//! presentation alone, independent of any concrete action.

const NONE: usize = usize::MAX;

/// Generators `0..ngens`; letter `2g` is generator `g`, `2g + 1` its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ngens: usize,
    pub relators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CosetError {
    #[error("coset table exceeded {0} rows")]
    TooManyCosets(usize),
    #[error("letter {letter} out of range for {ngens} generators")]
    BadLetter { letter: usize, ngens: usize },
}

impl Presentation {
    pub fn new(ngens: usize, relators: Vec<Vec<usize>>) -> Self {
        Self { ngens, relators }
    }

    /// Lowercase letters of `alphabet` are generators, uppercase their inverses.
    pub fn word_from_letters(word: &str, alphabet: &str) -> Vec<usize> {
        word.chars()
            .map(|c| {
                let g = alphabet
                    .find(c.to_ascii_lowercase())
                    .unwrap_or_else(|| panic!("letter `{c}` not in `{alphabet}`"));
                2 * g + usize::from(c.is_ascii_uppercase())
            })
            .collect()
    }
}

struct Table {
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>,
    cols: usize,
    limit: usize,
}

fn inv(letter: usize) -> usize {
    letter ^ 1
}

impl Table {
    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), CosetError> {
        if self.rows.len() >= self.limit {
            return Err(CosetError::TooManyCosets(self.limit));
        }
        let d = self.rows.len();
        self.rows.push(vec![NONE; self.cols]);
        self.parent.push(d);
        self.rows[c][x] = d;
        self.rows[d][inv(x)] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut cur = c;
        while self.parent[cur] != r {
            let next = self.parent[cur];
            self.parent[cur] = r;
            cur = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.rows[e][x];
                if f == NONE {
                    continue;
                }
                self.rows[f][inv(x)] = NONE;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.rows[e1][x] != NONE {
                    let t = self.rows[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.rows[f1][inv(x)] != NONE {
                    let t = self.rows[f1][inv(x)];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.rows[e1][x] = f1;
                    self.rows[f1][inv(x)] = e1;
                }
            }
        }
    }

    /// Traces `w` from coset `c` in both directions, defining cosets until
    /// the relator closes up.
    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), CosetError> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.rows[f][w[i]] != NONE {
                f = self.rows[f][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.rows[b][inv(w[j as usize])] != NONE {
                b = self.rows[b][inv(w[j as usize])];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.rows[f][w[i]] = b;
                self.rows[b][inv(w[i])] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// Order of the group, i.e. the index of the trivial subgroup.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<usize, CosetError> {
    let cols = 2 * p.ngens;
    if let Some(&letter) = p.relators.iter().flatten().find(|&&l| l >= cols) {
        return Err(CosetError::BadLetter { letter, ngens: p.ngens });
    }
    let mut t = Table {
        rows: vec![vec![NONE; cols]],
        parent: vec![0],
        cols,
        limit: max_cosets.max(1),
    };
    let mut c = 0;
    while c < t.rows.len() {
        for r in &p.relators {
            if !t.alive(c) {
                break;
            }
            t.scan_and_fill(c, r)?;
        }
        if t.alive(c) {
            for x in 0..cols {
                if t.rows[c][x] == NONE {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    Ok((0..t.rows.len()).filter(|&c| t.alive(c)).count())
}
