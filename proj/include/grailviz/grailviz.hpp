#ifndef GRAILVIZ_GRAILVIZ_HPP
#define GRAILVIZ_GRAILVIZ_HPP

#include "grailviz/automaton.hpp"
#include "grailviz/cli.hpp"
#include "grailviz/layout.hpp"
#include "grailviz/parser.hpp"
#include "grailviz/tikz.hpp"

#endif  // GRAILVIZ_GRAILVIZ_HPP
