//! Brute-force reference computations that work on raw PD label tuples.
//!
//! Nothing here touches the library's diagram, atom or bracket code. A
//! crossing term `(i, j, k, l)` is read counterclockwise starting from the
//! incoming understrand, so clockwise from the south end it visits
//! `i` (S), `l` (W), `k` (N), `j` (E). The a-weighted smoothing joins
//! S with W and N with E; the other joins W with N and E with S.

use std::collections::BTreeMap;

pub type Pd = Vec<[u32; 4]>;

pub fn parse_pd(text: &str) -> Pd {
    text.split("X(")
        .skip(1)
        .map(|term| {
            let inner = term.split(')').next().unwrap();
            let v: Vec<u32> = inner
                .split(',')
                .map(|s| s.trim().parse().unwrap())
                .collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect()
}

/// Count closed loops in the graph whose vertices are arc labels and whose
/// edges are the local joins chosen at each crossing, by depth-first search.
fn count_loops(pd: &Pd, state: u64) -> usize {
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (c, &[i, j, k, l]) in pd.iter().enumerate() {
        let joins = if state >> c & 1 == 1 {
            [(i, l), (k, j)]
        } else {
            [(l, k), (j, i)]
        };
        for (x, y) in joins {
            adj.entry(x).or_default().push(y);
            adj.entry(y).or_default().push(x);
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut loops = 0;
    for &start in adj.keys() {
        if !seen.insert(start) {
            continue;
        }
        loops += 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    loops
}

/// Bracket as an exponent -> coefficient map, summed state by state with
/// repeated polynomial multiplication.
pub fn bracket(pd: &Pd) -> BTreeMap<i64, i128> {
    let n = pd.len();
    let mut total: BTreeMap<i64, i128> = BTreeMap::new();
    if n == 0 {
        total.insert(0, 1);
        return total;
    }
    for state in 0..(1u64 << n) {
        let black = state.count_ones() as i64;
        let white = n as i64 - black;
        let loops = count_loops(pd, state);
        let mut term: BTreeMap<i64, i128> = BTreeMap::new();
        term.insert(black - white, 1);
        for _ in 1..loops {
            let mut next: BTreeMap<i64, i128> = BTreeMap::new();
            for (&e, &c) in &term {
                *next.entry(e + 2).or_default() -= c;
                *next.entry(e - 2).or_default() -= c;
            }
            term = next;
        }
        for (e, c) in term {
            *total.entry(e).or_default() += c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

pub fn span(p: &BTreeMap<i64, i128>) -> i64 {
    let lo = *p.keys().next().unwrap();
    let hi = *p.keys().next_back().unwrap();
    hi - lo
}

/// Loop counts of the all-a state and the all-other state.
pub fn extreme_loops(pd: &Pd) -> (usize, usize) {
    let n = pd.len();
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    (count_loops(pd, all), count_loops(pd, 0))
}

/// Writhe of a one-component PD code, oriented by walking the strand from
/// the first listed label. A strand entering at position `p` leaves at
/// `p + 2`. The crossing is positive when the overstrand enters at `l`.
pub fn writhe_traversal(pd: &Pd) -> i32 {
    let mut sign = vec![0i32; pd.len()];
    let (mut c, mut p) = (0usize, 0usize);
    for _ in 0..2 * pd.len() {
        match p {
            3 => sign[c] = 1,
            1 => sign[c] = -1,
            2 => panic!("crossing {c} is not listed from its incoming understrand"),
            _ => {}
        }
        let out = (p + 2) % 4;
        let label = pd[c][out];
        // The other end of `label`.
        let (nc, np) = pd
            .iter()
            .enumerate()
            .flat_map(|(x, t)| (0..4).map(move |y| (x, y, t[y])))
            .find(|&(x, y, l)| l == label && (x, y) != (c, out))
            .map(|(x, y, _)| (x, y))
            .unwrap();
        c = nc;
        p = np;
    }
    sign.iter().sum()
}

/// Evaluate a bracket at a = exp(i*pi/4) and return |value|, which equals the
/// knot determinant.
pub fn determinant(p: &BTreeMap<i64, i128>) -> i128 {
    // a^k for k mod 8 lies in {1, w, i, iw, -1, ...} with w = exp(i*pi/4).
    // Track the result as x + y*w + z*i + t*i*w with integer parts.
    let mut parts = [0i128; 4];
    for (&e, &c) in p {
        let k = e.rem_euclid(8) as usize;
        let sign = if k >= 4 { -1 } else { 1 };
        parts[k % 4] += sign * c;
    }
    // w = (1+i)/sqrt2, i*w = (-1+i)/sqrt2
    let (a, b, c, d) = (
        parts[0] as f64,
        parts[1] as f64,
        parts[2] as f64,
        parts[3] as f64,
    );
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let re = a + b * s - d * s;
    let im = c + b * s + d * s;
    (re.hypot(im)).round() as i128
}
