use super::{Cell, CellCollection, CellRect};

/// All maximal rectangles of `p`, sorted by `(lo.y, lo.x, hi.y, hi.x)`.
///
/// Row by row, a histogram of downward column heights is maintained; a
/// monotone stack yields for every column the widest span over which its bar
/// is the minimum. Each such span is a rectangle that cannot grow left, right
/// or down, and it is kept when it cannot grow up either.
pub fn maximal_rectangles(p: &CellCollection) -> Vec<CellRect> {
    let w = p.width() as usize;
    let h = p.height() as i32;
    let mut heights = vec![0u32; w];
    let mut left = vec![0usize; w];
    let mut right = vec![0usize; w];
    let mut stack: Vec<usize> = Vec::with_capacity(w);
    let mut out = Vec::new();

    for y in 1..=h {
        let bits = p.row_bits(y);
        for (x, hgt) in heights.iter_mut().enumerate() {
            *hgt = if bits >> x & 1 == 1 { *hgt + 1 } else { 0 };
        }

        stack.clear();
        for x in 0..w {
            while stack.last().is_some_and(|&t| heights[t] >= heights[x]) {
                stack.pop();
            }
            left[x] = stack.last().map_or(0, |&t| t + 1);
            stack.push(x);
        }
        stack.clear();
        for x in (0..w).rev() {
            while stack.last().is_some_and(|&t| heights[t] >= heights[x]) {
                stack.pop();
            }
            right[x] = stack.last().map_or(w - 1, |&t| t - 1);
            stack.push(x);
        }

        for x in 0..w {
            let hgt = heights[x];
            if hgt == 0 {
                continue;
            }
            let rect = CellRect::new(
                Cell::new(left[x] as i32 + 1, y - hgt as i32 + 1),
                Cell::new(right[x] as i32 + 1, y),
            );
            let above = CellRect::new(Cell::new(rect.lo.x, y + 1), Cell::new(rect.hi.x, y + 1));
            if !p.inner_interval(&above) {
                out.push(rect);
            }
        }
    }

    out.sort_by_key(CellRect::order_key);
    out.dedup();
    out
}
