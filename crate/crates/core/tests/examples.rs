#[allow(dead_code)]
mod constructions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/constructions.rs"));
}

#[test]
fn constructions_example_runs() {
    constructions::run_example().expect("constructions example should run");
}

#[allow(dead_code)]
mod steiner_blowups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/steiner_blowups.rs"));
}

#[test]
fn steiner_blowups_example_runs() {
    steiner_blowups::run_example().expect("steiner_blowups example should run");
}

#[allow(dead_code)]
mod detect_families {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/detect_families.rs"));
}

#[test]
fn detect_families_example_runs() {
    detect_families::run_example().expect("detect_families example should run");
}

#[allow(dead_code)]
mod boundary_curves {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/boundary_curves.rs"));
}

#[test]
fn boundary_curves_example_runs() {
    boundary_curves::run_example().expect("boundary_curves example should run");
}

#[allow(dead_code)]
mod kruskal_katona {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/kruskal_katona.rs"));
}

#[test]
fn kruskal_katona_example_runs() {
    kruskal_katona::run_example().expect("kruskal_katona example should run");
}

#[allow(dead_code)]
mod shadow_chain {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/shadow_chain.rs"));
}

#[test]
fn shadow_chain_example_runs() {
    shadow_chain::run_example().expect("shadow_chain example should run");
}

#[allow(dead_code)]
mod enumerate_free {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/enumerate_free.rs"));
}

#[test]
fn enumerate_free_example_runs() {
    enumerate_free::run_example().expect("enumerate_free example should run");
}

#[allow(dead_code)]
mod max_edges_for_shadow {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/max_edges_for_shadow.rs"));
}

#[test]
fn max_edges_for_shadow_example_runs() {
    max_edges_for_shadow::run_example().expect("max_edges_for_shadow example should run");
}

#[allow(dead_code)]
mod sampling {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sampling.rs"));
}

#[test]
fn sampling_example_runs() {
    sampling::run_example().expect("sampling example should run");
}

#[allow(dead_code)]
mod reduce_density {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reduce_density.rs"));
}

#[test]
fn reduce_density_example_runs() {
    reduce_density::run_example().expect("reduce_density example should run");
}

#[allow(dead_code)]
mod command_line {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/command_line.rs"));
}

#[test]
fn command_line_example_runs() {
    command_line::run_example().expect("command_line example should run");
}
