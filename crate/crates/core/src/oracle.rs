//! Brute-force ground truth.
//!
//! Everything here rebuilds the interval exchange straight from its block
//! definition and walks the image table. Nothing depends on the orbit
//! recursion, so the two can be checked against each other.

use crate::composition::Composition;

/// Image table of `T_λ`: `table[x - 1] = T(x)`.
fn image_table(c: &Composition) -> Vec<usize> {
    let parts = c.parts();
    let n = c.sum() as usize;
    let mut table = Vec::with_capacity(n);
    let mut before = 0usize;
    for (i, &len) in parts.iter().enumerate() {
        let len = len as usize;
        let after: usize = parts[i + 1..].iter().map(|&p| p as usize).sum();
        // x + s_i, with s_i = after - before
        for x in before + 1..=before + len {
            table.push(x + after - before);
        }
        before += len;
    }
    debug_assert!({
        let mut seen = vec![false; n];
        table
            .iter()
            .all(|&y| (1..=n).contains(&y) && !std::mem::replace(&mut seen[y - 1], true))
    });
    table
}

/// Orbits of `T_λ`, each listed from its smallest element, sorted.
pub fn brute_cycles(c: &Composition) -> Vec<Vec<u64>> {
    let table = image_table(c);
    let mut visited = vec![false; table.len()];
    let mut cycles = Vec::new();
    for start in 1..=table.len() {
        if visited[start - 1] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !visited[x - 1] {
            visited[x - 1] = true;
            cycle.push(x as u64);
            x = table[x - 1];
        }
        cycles.push(cycle);
    }
    cycles
}

/// `γ(T_λ)` by direct traversal.
pub fn brute_orbit_count(c: &Composition) -> u64 {
    let table = image_table(c);
    let mut visited = vec![false; table.len()];
    let mut count = 0;
    for start in 1..=table.len() {
        if visited[start - 1] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !visited[x - 1] {
            visited[x - 1] = true;
            x = table[x - 1];
        }
    }
    count
}

/// Orbit lengths sorted in decreasing order.
pub fn brute_cycle_lengths(c: &Composition) -> Vec<u64> {
    let mut lengths: Vec<u64> = brute_cycles(c).iter().map(|cy| cy.len() as u64).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Iterates compositions in lexicographic order.
///
/// Depending on the constructor this covers every composition of one sum,
/// every composition of every sum up to a bound (ascending sums), or only
/// those with a fixed number of parts.
#[derive(Debug, Clone)]
pub struct CompositionStream {
    current: Option<Vec<u64>>,
    sum: u64,
    max_sum: u64,
    length: Option<usize>,
}

impl CompositionStream {
    /// Every composition of `n`. Yields nothing for `n == 0`.
    pub fn of_sum(n: u64) -> Self {
        Self::bounded(n, n, None)
    }

    /// Every composition with sum in `1..=max_sum`.
    pub fn up_to(max_sum: u64) -> Self {
        Self::bounded(1, max_sum, None)
    }

    /// Every composition with exactly `len` parts and sum in `len..=max_sum`.
    pub fn with_length(len: usize, max_sum: u64) -> Self {
        Self::bounded(len.max(1) as u64, max_sum, Some(len))
    }

    fn bounded(first_sum: u64, max_sum: u64, length: Option<usize>) -> Self {
        let mut stream = CompositionStream {
            current: None,
            sum: first_sum,
            max_sum,
            length,
        };
        if length == Some(0) {
            stream.sum = max_sum + 1;
        }
        stream.current = stream.first();
        stream
    }

    /// Lexicographically smallest composition of the current sum.
    fn first(&self) -> Option<Vec<u64>> {
        if self.sum == 0 || self.sum > self.max_sum {
            return None;
        }
        match self.length {
            None => Some(vec![1; self.sum as usize]),
            Some(r) if (r as u64) <= self.sum => {
                let mut parts = vec![1; r];
                parts[r - 1] = self.sum - (r as u64 - 1);
                Some(parts)
            }
            Some(_) => None,
        }
    }

    fn advance(&self, parts: &[u64]) -> Option<Vec<u64>> {
        let mut next = parts.to_vec();
        match self.length {
            None => {
                // Fold the last part into its predecessor plus a tail of ones.
                if next.len() < 2 {
                    return None;
                }
                let last = next.pop().unwrap();
                *next.last_mut().unwrap() += 1;
                next.resize(next.len() + (last - 1) as usize, 1);
                Some(next)
            }
            Some(r) => {
                // Bump the rightmost part whose suffix still has slack.
                let mut suffix = 0u64;
                for i in (0..r).rev() {
                    if i + 1 < r && suffix > (r - 1 - i) as u64 {
                        next[i] += 1;
                        for p in next.iter_mut().take(r - 1).skip(i + 1) {
                            *p = 1;
                        }
                        next[r - 1] = suffix - 1 - (r - 2 - i) as u64;
                        return Some(next);
                    }
                    suffix += next[i];
                }
                None
            }
        }
    }
}

impl Iterator for CompositionStream {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let parts = self.current.take()?;
        self.current = match self.advance(&parts) {
            Some(next) => Some(next),
            None => {
                self.sum += 1;
                self.first()
            }
        };
        let sum = parts.iter().sum();
        Some(Composition::from_valid(parts, sum))
    }
}

/// Every composition of `n`, in lexicographic order.
pub fn all_compositions(n: u64) -> CompositionStream {
    CompositionStream::of_sum(n)
}

/// Every composition with at least two parts, sum at most `n_max`, and a
/// single orbit. The one-point composition `(1)` is not included.
pub fn all_circular(n_max: u64) -> Vec<Composition> {
    CompositionStream::up_to(n_max)
        .filter(|c| c.len() >= 2 && brute_orbit_count(c) == 1)
        .collect()
}
