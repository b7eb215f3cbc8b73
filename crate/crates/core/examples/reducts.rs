//! Reducts of a 3-graph, a tournament and an Feq2 structure, with extension probes.

use keisler_lab::structures::{
    extension_probe, random_maximal_free, reduct_transform, Feq2Structure, ProbeHost, Reduct, ReductInput, ReductKind,
    Side, Tournament,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = random_maximal_free(30, 3, 4, 4)?;
    if let Reduct::Graph { graph, .. } = reduct_transform(
        &ReductKind::HyperToGraph { anchor: vec![0] },
        ReductInput::Hypergraph(&h),
    )? {
        println!(
            "link graph of 0: {} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        );
        println!(
            "probe E(1,-), not E(2,-): {:?}",
            extension_probe(ProbeHost::Graph(&graph), &[1], &[2])?
        );
    }

    let t = Tournament::random(12, 3);
    if let Reduct::Bipartite { graph, .. } = reduct_transform(
        &ReductKind::TournamentToBipartite { apex: 0 },
        ReductInput::Tournament(&t),
    )? {
        println!("tournament reduct: {} + {} vertices", graph.left(), graph.right());
        let probe = extension_probe(
            ProbeHost::Bipartite {
                graph: &graph,
                side: Side::Left,
            },
            &[0],
            &[1],
        )?;
        println!("probe across parts: {probe:?}");
    }

    let f = Feq2Structure::tp2_grid(2)?;
    if let Reduct::Bipartite { graph, .. } =
        reduct_transform(&ReductKind::FeqToBipartite { apex: 4 }, ReductInput::Feq2(&f))?
    {
        println!(
            "feq reduct: {} objects x {} parameters, {} edges",
            graph.left(),
            graph.right(),
            graph.edges().count()
        );
    }
    Ok(())
}
