use std::fmt::Write as _;

use super::classify::ClassificationResult;

/// One block per class, in the result's class order:
///
/// ```text
/// class 1
/// size 6
/// generates true
/// members () (1,2) (1,3,2)
/// table
/// 1 2 3
/// ...
/// ```
pub fn render_dump(result: &ClassificationResult) -> String {
    let mut out = String::new();
    for (i, table) in result.representatives.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "class {}", i + 1);
        let _ = writeln!(out, "size {}", result.class_sizes[i]);
        let _ = writeln!(out, "generates {}", result.generating_flags[i]);
        let _ = writeln!(out, "members {}", result.representative_members[i].join(" "));
        out.push_str("table\n");
        for row in table.rows() {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
    }
    out
}

/// Number of `class` blocks in a dump.
pub fn count_blocks(dump: &str) -> usize {
    dump.lines().filter(|l| l.starts_with("class ")).count()
}
