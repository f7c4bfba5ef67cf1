use super::{Field, Ring, RingDescriptor};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// The prime field F_p for a word-size prime p outside {2, 3, 5}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if matches!(p, 2 | 3 | 5) {
            return Err(Error::ExcludedCharacteristic(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// Image of a rational number, or `None` when p divides the denominator.
    pub fn reduce_rational(&self, r: &num_rational::BigRational) -> Option<u64> {
        let n = self.from_int(r.numer());
        let d = self.from_int(r.denom());
        self.inv(&d).map(|di| self.mul(&n, &di))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_u64(&self, a: u64) -> u64 {
        a % self.p
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn powmod(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(acc, a);
            }
            a = self.mulmod(a, a);
            e >>= 1;
        }
        acc
    }

    /// Tonelli-Shanks. Returns the smaller of the two roots.
    fn tonelli_shanks(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if self.powmod(a, (p - 1) / 2) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.powmod(z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.powmod(z, q);
        let mut t = self.powmod(a, q);
        let mut r = self.powmod(a, (q + 1) / 2);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = self.mulmod(t2, t2);
                i += 1;
            }
            let b = self.powmod(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mulmod(b, b);
            t = self.mulmod(t, c);
            r = self.mulmod(r, b);
        }
        Some(r.min(p - r))
    }
}

impl Ring for PrimeField {
    type Element = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits in u64")
    }
    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.p as i128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulmod(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn pow(&self, a: &u64, e: u64) -> u64 {
        self.powmod(*a, e)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Extended Euclid on i128 to stay clear of overflow.
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i128) as u64)
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Option<u64> {
        self.inv(b).map(|bi| self.mulmod(*a, bi))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

impl Field for PrimeField {
    fn sqrt(&self, a: &u64) -> Option<u64> {
        self.tonelli_shanks(*a)
    }

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::prime(self.p).expect("validated at construction")
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
