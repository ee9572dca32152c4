//! Lists the set partitions of [m] with their components and class membership.
//!
//! cargo run --example set_partitions -- 4

use avoiders::enumeration::generate_set_partitions;

fn main() {
    let m: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for x in generate_set_partitions(m) {
        let tag = x.class_tag();
        let components: Vec<String> = x.components().iter().map(ToString::to_string).collect();
        println!(
            "{:<16} components: {:<24} indecomposable={} image_class={} deficient={}",
            x.to_string(),
            components.join(" | "),
            tag.indecomposable,
            tag.in_image_class,
            tag.deficient
        );
    }
}
