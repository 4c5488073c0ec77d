//! Index-tuple enumeration in lexicographic order.

/// Odometer over `ranges[0] x ranges[1] x ...`, first position most significant.
pub(crate) struct Odometer {
    ranges: Vec<(usize, usize)>,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Odometer {
    /// Half-open ranges `[lo, hi)` per position.
    pub(crate) fn new(ranges: Vec<(usize, usize)>) -> Self {
        let done = ranges.iter().any(|(lo, hi)| lo >= hi);
        let current = ranges.iter().map(|r| r.0).collect();
        Odometer { ranges, current, started: false, done }
    }

    pub(crate) fn uniform(n: usize, arity: usize) -> Self {
        Self::new(vec![(0, n); arity])
    }

    pub(crate) fn next_tuple(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let mut k = self.current.len();
        while k > 0 {
            k -= 1;
            self.current[k] += 1;
            if self.current[k] < self.ranges[k].1 {
                return Some(&self.current);
            }
            self.current[k] = self.ranges[k].0;
        }
        self.done = true;
        None
    }
}

/// Calls `f` on every tuple over `0..len` with at least one index `>= fresh`,
/// stopping early when `f` returns `false`.
pub(crate) fn for_each_touching(len: usize, fresh: usize, arity: usize, mut f: impl FnMut(&[usize]) -> bool) {
    // Split on the first position holding a fresh index.
    for first_fresh in 0..arity {
        let mut ranges = Vec::with_capacity(arity);
        ranges.extend(std::iter::repeat_n((0, fresh), first_fresh));
        ranges.push((fresh, len));
        ranges.extend(std::iter::repeat_n((0, len), arity - first_fresh - 1));
        let mut odo = Odometer::new(ranges);
        while let Some(t) = odo.next_tuple() {
            if !f(t) {
                return;
            }
        }
    }
}

/// Like [`for_each_touching`] but only visits non-decreasing tuples.
pub(crate) fn for_each_sorted_touching(len: usize, fresh: usize, arity: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if arity == 0 {
        return;
    }
    let m = arity - 1;
    let mut t = vec![0usize; arity];
    for last in fresh..len {
        t.fill(0);
        t[m] = last;
        loop {
            if !f(&t) {
                return;
            }
            // advance the prefix t[..m] over non-decreasing sequences bounded by `last`
            match (0..m).rev().find(|&k| t[k] < last) {
                Some(k) => {
                    let v = t[k] + 1;
                    t[k..m].fill(v);
                }
                None => break,
            }
        }
    }
}

pub(crate) fn is_non_decreasing(t: &[usize]) -> bool {
    t.windows(2).all(|w| w[0] <= w[1])
}

pub(crate) fn has_repeat(t: &[usize]) -> bool {
    t.iter().enumerate().any(|(a, x)| t[a + 1..].contains(x))
}

/// All subsets of `0..n` with at least `min_size` elements, by size then lexicographically.
pub(crate) fn subsets_by_size(n: usize, min_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in min_size..=n {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            out.push(comb.clone());
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    out
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let size = comb.len();
    for k in (0..size).rev() {
        if comb[k] < n - size + k {
            comb[k] += 1;
            for m in k + 1..size {
                comb[m] = comb[m - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_counts() {
        let mut odo = Odometer::uniform(3, 2);
        let mut seen = Vec::new();
        while let Some(t) = odo.next_tuple() {
            seen.push(t.to_vec());
        }
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[8], vec![2, 2]);
        assert!(Odometer::uniform(0, 2).next_tuple().is_none());
    }

    #[test]
    fn touching_tuples_partition_the_new_ones() {
        let (len, fresh, arity) = (5, 3, 3);
        let mut seen = Vec::new();
        for_each_touching(len, fresh, arity, |t| {
            seen.push(t.to_vec());
            true
        });
        let expected = len.pow(arity as u32) - fresh.pow(arity as u32);
        assert_eq!(seen.len(), expected);
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), expected);
        assert!(seen.iter().all(|t| t.iter().any(|&i| i >= fresh)));
    }

    #[test]
    fn sorted_touching_tuples() {
        for arity in 1..=3 {
            let (len, fresh) = (5, 2);
            let mut seen = Vec::new();
            for_each_sorted_touching(len, fresh, arity, |t| {
                seen.push(t.to_vec());
                true
            });
            let mut expected = Vec::new();
            let mut odo = Odometer::uniform(len, arity);
            while let Some(t) = odo.next_tuple() {
                if is_non_decreasing(t) && t.iter().any(|&i| i >= fresh) {
                    expected.push(t.to_vec());
                }
            }
            seen.sort();
            assert_eq!(seen, expected, "arity {arity}");
        }
    }

    #[test]
    fn subsets() {
        let s = subsets_by_size(4, 2);
        assert_eq!(s.len(), 6 + 4 + 1);
        assert_eq!(s[0], vec![0, 1]);
        assert_eq!(s[6], vec![0, 1, 2]);
        assert_eq!(s[10], vec![0, 1, 2, 3]);
        assert_eq!(subsets_by_size(2, 2), vec![vec![0, 1]]);
    }
}
