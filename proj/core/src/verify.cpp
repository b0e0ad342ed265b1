#include "spinpoly/rational.hpp"
