#pragma once
namespace bipair::cli { inline int main(int, char**) { return 0; } }
