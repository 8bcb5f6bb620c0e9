//! Sparse-table range queries returning the position of the extreme value.

/// Answers arg-min (or arg-max) over any inclusive range in O(1) after
/// O(n log n) preprocessing. Ties resolve to the smallest index.
#[derive(Debug, Clone)]
pub struct SparseTable<T> {
    values: Vec<T>,
    levels: Vec<Vec<u32>>,
    want_max: bool,
}

impl<T: Ord + Copy> SparseTable<T> {
    pub fn argmin(values: Vec<T>) -> Self {
        Self::build(values, false)
    }

    pub fn argmax(values: Vec<T>) -> Self {
        Self::build(values, true)
    }

    fn build(values: Vec<T>, want_max: bool) -> Self {
        let n = values.len();
        let mut levels: Vec<Vec<u32>> = Vec::new();
        if n > 0 {
            levels.push((0..n as u32).collect());
        }
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=n - 2 * width)
                .map(|i| Self::pick(&values, want_max, prev[i], prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable {
            values,
            levels,
            want_max,
        }
    }

    #[inline]
    fn pick(values: &[T], want_max: bool, a: u32, b: u32) -> u32 {
        let (va, vb) = (values[a as usize], values[b as usize]);
        let b_wins = if want_max { vb > va } else { vb < va };
        if b_wins || (va == vb && b < a) {
            b
        } else {
            a
        }
    }

    /// Index of the extreme value in `values[lo..=hi]`.
    pub fn query(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi && hi < self.values.len());
        let k = usize::BITS - 1 - (hi - lo + 1).leading_zeros();
        let row = &self.levels[k as usize];
        Self::pick(&self.values, self.want_max, row[lo], row[hi + 1 - (1 << k)]) as usize
    }

    pub fn value(&self, i: usize) -> T {
        self.values[i]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
