//! Small-integer number theory: sieving, trial-division factorization, Euler's totient.

/// All primes `p <= limit`, by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Totients of `0..=limit` by sieving; `phi[0]` is 0.
pub fn totients_up_to(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for p in 2..=limit {
        if phi[p] == p as u64 {
            let mut m = p;
            while m <= limit {
                phi[m] -= phi[m] / p as u64;
                m += p;
            }
        }
    }
    phi
}

/// Prime factorization `m = Π p^e` by trial division, primes ascending.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    assert!(m >= 1, "factorize(0)");
    let mut out = Vec::new();
    let mut push = |p: u64, m: &mut u64| {
        let mut e = 0;
        while m.is_multiple_of(p) {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut m);
    let mut p = 3u64;
    while p.saturating_mul(p) <= m {
        push(p, &mut m);
        p += 2;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn prime_divisors(m: u64) -> Vec<u64> {
    factorize(m).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && factorize(m) == [(m, 1)]
}

/// Euler's totient. `euler_phi(1) == 1`.
///
/// # Panics
/// If `m == 0`.
pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}
