#pragma once

#include <string>
#include <vector>

#include "kgqr/graph.hpp"
#include "kgqr/query.hpp"

namespace kgqr::testsup {

// IRI factories for the shared fixture namespace
Term kg(const std::string& local);
Term rdf_type_term();

// file-backed fixtures (tests/fixtures)
std::vector<Triple> table1_triples();
std::vector<Triple> scorsese_triples();
Graph table1_graph(bool closed = true);
Graph scorsese_graph(bool closed = true);
BGPQuery director_query();
std::string fixture_path(const std::string& name);

// 10 entities; fact (kg:p, kg:shared) held by two of them; kg:shared occurs
// four times as an object
Graph ten_entity_graph();

// DBpedia-style walkthrough graph: Francis_Ford_Coppola with two birth
// places and two occupations, movies typed Film with Film below Work
Graph ffc_graph();
Term dbo(const std::string& local);
Term dbr(const std::string& local);

// university-benchmark-shaped synthetic dataset, exactly 2000 triples;
// Department0 of University0 employs professors but no lecturers
std::vector<Triple> lubm_triples();
Graph lubm_graph();  // closed
Term ub(const std::string& local);    // schema namespace
Term uinst(const std::string& local); // instance namespace

}  // namespace kgqr::testsup
