#pragma once

#include <string>
#include <vector>

#include "actions.hpp"
#include "cell_graph.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "loops.hpp"
#include "standard_graph.hpp"

namespace smg {

// Versioned structured text. Parsing reports line/field diagnostics via
// ParseError; validation beyond well-formedness is layered on top
// (a parsed graph may still fail validate()).

std::string serialize(const StandardGraph& g);
StandardGraph parse_standard_graph(const std::string& text);

std::string serialize(const CellGraph& cg);
CellGraph parse_cell_graph(const std::string& text);

std::string serialize(const ChordDiagram& d);
ChordDiagram parse_chord_diagram(const std::string& text);

// comma-separated tokens j^+2, j^-2, j^+1, j^-1
std::string braid_word_str(const BraidWord& w);
BraidWord parse_braid_word(const std::string& text);

std::string serialize(const LoopSystem& sys);
LoopSystem parse_loop_system(const std::string& text);

std::string serialize_corpus(const std::vector<StandardGraph>& corpus);
std::vector<StandardGraph> parse_corpus(const std::string& text);

// Planar-hinting DOT with edge labels and I/V/Y structure styling
// (dotted/dashed/dotdashed). Advisory output; nothing parses it back.
std::string export_dot(const StandardGraph& g);
std::string export_dot(const CellGraph& cg);

} // namespace smg
