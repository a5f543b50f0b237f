use crate::element::Element;
use crate::subsemigroup::Subsemigroup;

/// Draws the `(W+1) × (W+1)` corner of the `B` array: row `i`, column `j`
/// is `#` for members and `.` otherwise, cells separated by one space,
/// rows by `\n`, with no trailing newline.
pub fn render_window(s: &Subsemigroup, w: u64) -> String {
    (0..=w)
        .map(|i| {
            (0..=w)
                .map(|j| {
                    if s.contains(Element::new(i, j)) {
                        "#"
                    } else {
                        "."
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsemigroup::named::*;

    #[test]
    fn grids() {
        let r1 = Subsemigroup::new(r1()).unwrap();
        assert_eq!(render_window(&r1, 2), "# # #\n. . .\n. . .");
        let d = Subsemigroup::new(diagonal([0, 1])).unwrap();
        assert_eq!(render_window(&d, 1), "# .\n. #");
        let bp = Subsemigroup::new(b_plus()).unwrap();
        assert_eq!(render_window(&bp, 2), "# # #\n. # #\n. . #");
        assert_eq!(render_window(&bp, 0), "#");
    }

    #[test]
    fn grid_size() {
        let bp = Subsemigroup::new(b_plus()).unwrap();
        for w in 0..20u64 {
            let n = render_window(&bp, w).len() as u64;
            assert_eq!(n, (w + 1) * (2 * w + 1) + w);
        }
    }
}
