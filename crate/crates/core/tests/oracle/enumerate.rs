// Brute-force posterior oracle shared by the HMM and acceptance tests.

/// Sums the joint probability over every state path.
pub fn enumerate(pi: &[f64], a: &[Vec<f64>], logb: &[f64], k: usize) -> (f64, Vec<f64>, Vec<f64>) {
    let t_len = logb.len() / k;
    let n_paths = k.pow(t_len as u32);
    let mut total = 0.0;
    let mut gamma = vec![0.0; t_len * k];
    let mut xi = vec![0.0; k * k];
    let mut path = vec![0usize; t_len];
    for code in 0..n_paths {
        let mut c = code;
        for s in path.iter_mut() {
            *s = c % k;
            c /= k;
        }
        let mut p = pi[path[0]] * logb[path[0]].exp();
        for t in 1..t_len {
            p *= a[path[t - 1]][path[t]] * logb[t * k + path[t]].exp();
        }
        total += p;
        for t in 0..t_len {
            gamma[t * k + path[t]] += p;
            if t > 0 {
                xi[path[t - 1] * k + path[t]] += p;
            }
        }
    }
    gamma.iter_mut().for_each(|g| *g /= total);
    xi.iter_mut().for_each(|x| *x /= total);
    (total.ln(), gamma, xi)
}
