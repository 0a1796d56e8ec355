pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Least k in 2..p with k^3 = 1 mod p; exists exactly when p = 1 mod 3.
pub fn least_cube_root_of_unity(p: u32) -> Option<u32> {
    let p64 = p as u64;
    (2..p).find(|&k| (k as u64).pow(3) % p64 == 1)
}
