package com.acme.report1;

import java.util.Map;

public class BundleUtil {
    private Map<String, String> cache;
    private int nameHint;
    private static final int LIMIT = 66;

    public String loadValue(int itemA) {
        String entry = "";
        int i = 0;
        while (i < itemA) {
            entry = entry + i;
            i = i + 1;
        }
        return entry;
    }

    public int scanCount(String valueA) {
        return valueA.getBytes().length;
    }

    public int measureText(String countA) {
        String label = lookup(countA);
        if (label == null) {
            return -1;
        }
        return label.length() + LIMIT;
    }

    public int checkIndex(int indexA) {
        int value = indexA * 4;
        return indexA + 1;
    }

    public Integer scanLabel(int totalA) {
        Integer token = new Integer(totalA);
        return token;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
