//! Even-order cycle families in which every pair of vertices is antipodal in
//! exactly one member.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFamily, VertexUniverse};
use crate::resolution::antipodal_pairs;

#[derive(Debug, Clone)]
pub struct AntipodalFamily {
    pub family: GraphFamily,
    /// Label placements undone by the search; zero when the greedy order
    /// completes on its own.
    pub backtracks: u64,
}

/// Builds `n - 1` cycles on labels `1..n`. Cycle `c` is filled pair by pair:
/// pair `t` occupies positions `t` and `t + n/2`. Each pair takes the
/// smallest label not yet in the cycle and the smallest larger partner it
/// has not been antipodal to. Dead ends are undone in that same preference
/// order.
pub fn gen_antipodal_cycle_family(n: usize) -> Result<AntipodalFamily> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("n must be even and at least 4, got {n}")));
    }
    let mut st = State {
        n,
        half: n / 2,
        used_pair: vec![false; n * n],
        cycles: vec![vec![usize::MAX; n]; n - 1],
        in_cycle: vec![false; n],
        backtracks: 0,
    };
    if !st.fill(0, 0) {
        return Err(Error::Construction(format!(
            "no antipodal cycle decomposition found for n = {n} after {} backtracks",
            st.backtracks
        )));
    }

    let universe = VertexUniverse::numbered("", n);
    let members = st
        .cycles
        .iter()
        .enumerate()
        .map(|(c, order)| Graph::cycle(&format!("C{}", c + 1), universe.clone(), order))
        .collect::<Result<Vec<_>>>()?;
    let family = GraphFamily::new(format!("antipodal{n}"), members)?;
    check_partition(&family)?;
    Ok(AntipodalFamily {
        family,
        backtracks: st.backtracks,
    })
}

struct State {
    n: usize,
    half: usize,
    used_pair: Vec<bool>,
    cycles: Vec<Vec<usize>>,
    in_cycle: Vec<bool>,
    backtracks: u64,
}

impl State {
    fn fill(&mut self, c: usize, t: usize) -> bool {
        if c == self.n - 1 {
            return true;
        }
        if t == self.half {
            let saved = std::mem::replace(&mut self.in_cycle, vec![false; self.n]);
            if self.fill(c + 1, 0) {
                return true;
            }
            self.in_cycle = saved;
            return false;
        }
        let i = (0..self.n).find(|&v| !self.in_cycle[v]).expect("a free label remains");
        for j in i + 1..self.n {
            if self.in_cycle[j] || self.used_pair[i * self.n + j] {
                continue;
            }
            self.place(c, t, i, j, true);
            if self.fill(c, t + 1) {
                return true;
            }
            self.place(c, t, i, j, false);
            self.backtracks += 1;
        }
        false
    }

    fn place(&mut self, c: usize, t: usize, i: usize, j: usize, on: bool) {
        self.used_pair[i * self.n + j] = on;
        self.in_cycle[i] = on;
        self.in_cycle[j] = on;
        let (a, b) = if on { (i, j) } else { (usize::MAX, usize::MAX) };
        self.cycles[c][t] = a;
        self.cycles[c][t + self.half] = b;
    }
}

/// Every unordered pair is antipodal in exactly one member.
fn check_partition(fam: &GraphFamily) -> Result<()> {
    let n = fam.n();
    let mut count = vec![0u32; n * n];
    for g in fam.members() {
        for (x, y) in antipodal_pairs(g)? {
            count[x * n + y] += 1;
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if count[x * n + y] != 1 {
                return Err(Error::Construction(format!(
                    "pair {}-{} is antipodal in {} cycles",
                    x + 1,
                    y + 1,
                    count[x * n + y]
                )));
            }
        }
    }
    Ok(())
}
