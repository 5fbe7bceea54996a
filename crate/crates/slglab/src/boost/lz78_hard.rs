use crate::error::{pre, Result};
use crate::symbol::Terminal;

/// `w_Y = c_1^{x_2 - x_1} c_2^{x_3 - x_2} ... c_m^{universe - x_m}`, so that
/// the character at 1-based position `x + 1` is the color of the
/// predecessor of `x` in `Y`.
pub fn lz78_hard_string(y: &[(u64, char)], universe: u64) -> Result<Vec<Terminal>> {
    let Some(&(first, _)) = y.first() else { return pre("empty key set") };
    if first != 0 {
        return pre("the first key must be 0");
    }
    if let Some(w) = y.windows(2).find(|w| w[0].0 >= w[1].0) {
        return pre(format!("keys not strictly increasing at {}", w[1].0));
    }
    if y.last().unwrap().0 >= universe {
        return pre("key outside the universe");
    }
    if let Some(&(_, c)) = y.iter().find(|(_, c)| *c != '0' && *c != '1') {
        return pre(format!("color `{c}` is not 0 or 1"));
    }
    let mut out = Vec::with_capacity(universe as usize);
    for (i, &(x, c)) in y.iter().enumerate() {
        let next = y.get(i + 1).map_or(universe, |p| p.0);
        out.extend(std::iter::repeat_n(Terminal::Char(c), (next - x) as usize));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::plain;

    #[test]
    fn examples() {
        assert_eq!(plain(&lz78_hard_string(&[(0, '0'), (2, '1')], 4).unwrap()).unwrap(), "0011");
        assert_eq!(plain(&lz78_hard_string(&[(0, '1'), (1, '1')], 4).unwrap()).unwrap(), "1111");
        assert!(lz78_hard_string(&[(1, '0'), (2, '1')], 4).is_err());
        assert!(lz78_hard_string(&[(0, '0'), (0, '1')], 4).is_err());
        assert!(lz78_hard_string(&[(0, '0'), (4, '1')], 4).is_err());
        assert!(lz78_hard_string(&[(0, '2')], 4).is_err());
    }
}
