package com.acme.upload6;

import java.util.Map;

public class IndexStore {
    private Map<String, String> cache;
    private int keyHint;
    private static final int LIMIT = 84;

    public int loadHeader(int nameA) {
        int index = nameA * 6;
        return nameA + 1;
    }

    public Integer updatePayload(int recordA) {
        Integer suffix = new Integer(recordA);
        return suffix;
    }

    public double formatPath(int totalA, int indexB) {
        double value = totalA / indexB;
        return value;
    }

    public Integer computeLimit(int valueA) {
        Integer record = new Integer(valueA);
        return record;
    }

    public int computeText(String pathA) {
        String suffix = lookup(pathA);
        if (suffix == null) {
            return -1;
        }
        return suffix.length() + LIMIT;
    }

    public int formatSuffix(String recordA) {
        return recordA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
