use std::ops::Range;

/// Subsample generator on abstract sequences: `|s| ≤ 3` yields `[s ++ t]`;
/// otherwise, with `q = ⌊|s|/4⌋`, `s` splits into `S₀` (first `|s| − 3q`
/// items) and consecutive blocks `S₁, S₂, S₃` of `q` items, and the output is
/// `A(S₀; S₂S₃t) ++ A(S₀; S₁S₃t) ++ A(S₀; S₁S₂t)`.
pub fn subsamples<T: Clone>(s: &[T], t: &[T]) -> Vec<Vec<T>> {
    let owned: Vec<T> = s.iter().chain(t).cloned().collect();
    let tail: Vec<Range<usize>> = if t.is_empty() { vec![] } else { vec![s.len()..s.len() + t.len()] };
    let mut out = Vec::new();
    generate(0..s.len(), &tail, &mut out);
    out.into_iter()
        .map(|ranges| ranges.into_iter().flat_map(|r| owned[r].iter().cloned()).collect::<Vec<T>>())
        .collect()
}

/// Subsamples of `0..m` as lists of index ranges, in output order.
pub fn subsample_ranges(m: usize) -> Vec<Vec<Range<usize>>> {
    let mut out = Vec::new();
    generate(0..m, &[], &mut out);
    out
}

fn generate(s: Range<usize>, t: &[Range<usize>], out: &mut Vec<Vec<Range<usize>>>) {
    let len = s.len();
    if len <= 3 {
        let mut v = Vec::with_capacity(t.len() + 1);
        if !s.is_empty() {
            v.push(s);
        }
        v.extend(t.iter().cloned());
        out.push(v);
        return;
    }
    let q = len / 4;
    let a = s.start + len - 3 * q;
    let s0 = s.start..a;
    let (s1, s2, s3) = (a..a + q, a + q..a + 2 * q, a + 2 * q..s.end);
    for pair in [[&s2, &s3], [&s1, &s3], [&s1, &s2]] {
        let mut tail = vec![pair[0].clone(), pair[1].clone()];
        tail.extend(t.iter().cloned());
        generate(s0.clone(), &tail, out);
    }
}

/// Number of subsamples produced for `|s| = m`.
pub fn subsample_count(m: usize) -> usize {
    if m <= 3 {
        1
    } else {
        3 * subsample_count(m - 3 * (m / 4))
    }
}
