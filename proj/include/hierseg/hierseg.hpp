#ifndef HIERSEG_HIERSEG_HPP
#define HIERSEG_HIERSEG_HPP

#include "hierseg/types.hpp"
#include "hierseg/image.hpp"
#include "hierseg/union_find.hpp"
#include "hierseg/partition.hpp"
#include "hierseg/graph.hpp"
#include "hierseg/alpha_tree.hpp"
#include "hierseg/component_tree.hpp"
#include "hierseg/separation.hpp"
#include "hierseg/alpha_n.hpp"
#include "hierseg/ultrametric.hpp"
#include "hierseg/area_filter.hpp"
#include "hierseg/dendrogram.hpp"
#include "hierseg/pgm.hpp"

#endif
