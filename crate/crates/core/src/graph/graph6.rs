//! graph6 encoding: size prefix, then the upper triangle column by column,
//! six bits per printable byte.

use super::Graph;
use crate::error::{Error, Result};

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid byte {b:#x}")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => return Err(Error::Graph6("order too large".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Graph6("truncated size".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n > super::MAX_ORDER {
        return Err(Error::Graph6(format!("order {n} exceeds {}", super::MAX_ORDER)));
    }
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for order {n}, got {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // standard encodings from the format description
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(encode(&Graph::empty(0)), "?");
        let c5 = Graph::from_fn(5, |i, j| j - i == 1 || j - i == 4);
        assert_eq!(encode(&c5), "Dhc");
        let p = Graph::from_fn(10, |i, j| {
            // Petersen: outer 5-cycle 0..4, spokes i–i+5, inner pentagram
            (j < 5 && (j - i == 1 || j - i == 4))
                || (i < 5 && j == i + 5)
                || (i >= 5 && (j - i == 2 || j - i == 3))
        });
        assert_eq!(encode(&p), "IheA@GUAo");
    }

    #[test]
    fn round_trip_and_long_form() {
        let g = Graph::from_fn(63, |i, j| (i * 7 + j * 3) % 5 == 1);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
        assert_eq!(decode(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn rejects_garbage() {
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("").is_err());
    }
}
