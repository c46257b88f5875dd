use std::fmt;

/// Tally of complex scalar operations performed by an instrumented run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub mul: u64,
    pub add: u64,
    pub div: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn record(&mut self, mul: u64, add: u64, div: u64) {
        self.mul += mul;
        self.add += add;
        self.div += div;
    }

    pub fn total(&self) -> u64 {
        self.mul + self.add + self.div
    }
}

/// The op-count summary line, `mul=<int> add=<int> div=<int>`.
impl fmt::Display for OpCounter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mul={} add={} div={}", self.mul, self.add, self.div)
    }
}
