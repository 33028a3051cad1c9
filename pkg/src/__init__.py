# Central Extension Toolkit Package
